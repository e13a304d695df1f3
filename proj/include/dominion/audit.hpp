#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dominion/bounds.hpp"
#include "dominion/exact.hpp"
#include "dominion/families.hpp"
#include "dominion/graph.hpp"

namespace dominion {

// Canonical text form of the bound table, one cell per line.
std::string bound_table_text();
std::uint64_t fnv1a(const std::string& text);

Graph random_graph(std::mt19937_64& rng, int n, double p);
// count graphs with n uniform in [1, max_n] and edge probability cycling 0.2, 0.5, 0.8.
std::vector<Graph> seeded_corpus(std::uint64_t seed, int count, int max_n);

struct Violation {
    Param row;
    Param col;
    std::string rule;  // "table" or "edgeless"
    Value row_value;
    Value col_value;
    Rational limit{0};
};

// Exact values of the thirteen main parameters, in table order.
std::vector<Value> main_values(const Graph& g, std::uint64_t budget = kDefaultBudget);
std::vector<Violation> audit_values(const Graph& g, const std::vector<Value>& values);
std::vector<Violation> audit_graph(const Graph& g, std::uint64_t budget = kDefaultBudget);

struct SharpnessAssignment {
    Param row;
    Param col;
    Family family;
    bool bracketed;  // equality only holds on graphs with an edge
    std::vector<int> sizes;
};

const std::vector<SharpnessAssignment>& sharpness_assignments();
const SharpnessAssignment& sharpness_for(Param row, Param col);

struct SharpnessReport {
    Param row;
    Param col;
    Family family;
    int size;
    Value row_value;
    Value col_value;
    Rational bound{0};
    bool pass;
};

SharpnessReport sharpness_check(const SharpnessAssignment& s, int size,
                                 std::uint64_t budget = kDefaultBudget);

// Evidence for a no-bound cell: the row parameter grows strictly while the column stays put.
struct UnboundedReport {
    Param row;
    Param col;
    Family family;
    std::vector<int> sizes;
    std::vector<Value> row_values;
    std::vector<Value> col_values;
    bool pass;
};

UnboundedReport unbounded_check(Param row, Param col, const std::vector<int>& sizes = {3, 4, 5},
                                std::uint64_t budget = kDefaultBudget);

struct Structure {
    std::vector<std::pair<Param, Param>> covers;     // (lower, upper) over all fifteen parameters
    std::vector<std::vector<Param>> classes;          // bottom class first
    bool linear = false;
};

// Encoded covering pairs of the pointwise order.
const std::vector<std::pair<Param, Param>>& covering_pairs();
// Covering pairs of the pointwise order implied by the table, main parameters only.
std::vector<std::pair<Param, Param>> covers_from_table();
Structure hasse_and_classes();

}  // namespace dominion
