#pragma once

#include <cstdint>
#include <vector>

#include "dominion/graph.hpp"
#include "dominion/params.hpp"

namespace dominion {

enum class WitnessKind { Int, Rainbow, Edge };

// Rainbow labels are two-bit sets: bit 0 is a, bit 1 is b.
inline constexpr std::uint8_t kEmpty = 0, kA = 1, kB = 2, kAB = 3;

struct Witness {
    WitnessKind kind = WitnessKind::Int;
    std::vector<std::uint8_t> values;

    bool operator==(const Witness&) const = default;
    bool operator<(const Witness& o) const { return values < o.values; }
};

WitnessKind kind_for(Param p);
Witness make_int(std::vector<std::uint8_t> values);
Witness make_rainbow(std::vector<std::uint8_t> values);
Witness make_edge(std::vector<std::uint8_t> values);
Witness set_witness(int n, const std::vector<Vertex>& members);

int witness_weight(const Witness& w);
std::vector<Vertex> support(const Witness& w);

// Throws WitnessShapeMismatch or CodomainViolation.
void check_shape(Param p, int domain_size, const Witness& w);

bool is_feasible(Param p, const Graph& g, const Witness& w);
// Per-vertex condition of p; w must already have the right shape.
bool vertex_satisfied(Param p, const Graph& g, const Witness& w, Vertex v);

bool is_cover_feasible(Param p, const Graph& g, const Witness& w);
bool is_cover_feasible(Param p, const MultiGraph& g, const Witness& w);

bool defined_on(Param p, const Graph& g);
// Exhaustive bipartition search; only for small graphs.
bool splits_into_two_total_dominating_sets(const Graph& g);

}  // namespace dominion
