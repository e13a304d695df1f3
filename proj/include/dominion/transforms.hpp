#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dominion/bounds.hpp"
#include "dominion/graph.hpp"
#include "dominion/params.hpp"
#include "dominion/witness.hpp"

namespace dominion {

enum class SideCondition { None, NoIsolated, AtLeastOneEdge, NotK1, MinDegree2, TotalDomatic2 };

const char* side_condition_name(SideCondition s);
bool side_condition_holds(SideCondition s, const Graph& g);

// Maps a source witness to a target witness of weight at most a * w + b.
struct Transform {
    std::string id;  // "r,c" for table cells, "target<source" for order projections
    Param target;
    Param source;
    bool projection;
    Rational a{1};
    Rational b{0};
    SideCondition side = SideCondition::None;
};

const std::vector<Transform>& transforms();
// Accepts "r,c" with 1-based table indices or parameter names, or "target<source".
const Transform& find_transform(std::string_view id);
const Transform* find_transform(Param target, Param source);

struct TransformResult {
    Witness witness;
    int steps = 0;  // recoloring steps, only counted by (11,10)
};

TransformResult run(const Transform& t, const Graph& g, const Witness& src);
inline Witness apply(const Transform& t, const Graph& g, const Witness& src) {
    return run(t, g, src).witness;
}

struct GuaranteeReport {
    std::string id;
    long long source_weight = 0;
    long long target_weight = 0;
    Rational bound{0};
    bool feasible = false;
    bool pass = false;
    Witness target;
};

GuaranteeReport verify_guarantee(const Transform& t, const Graph& g, const Witness& src);

}  // namespace dominion
