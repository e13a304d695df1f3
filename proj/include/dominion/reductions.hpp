#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dominion/graph.hpp"
#include "dominion/witness.hpp"

namespace dominion {

struct SetCoverInstance {
    int ground = 0;
    std::vector<std::vector<int>> sets;
};

// Throws InvalidInstance unless every set lies in the ground set and covers it together.
void validate(const SetCoverInstance& j);
bool is_cover(const SetCoverInstance& j, const std::vector<int>& chosen);

struct SetCoverGadget {
    Graph graph;
    SplitPartition partition;
    std::vector<Vertex> a;                 // a_F = i
    std::vector<Vertex> b;                 // b_F = |F| + i
    std::vector<std::array<Vertex, 3>> copies;  // copy j of element s = 2|F| + j*|S| + s
};

SetCoverGadget set_cover_to_split(const SetCoverInstance& j);

// Indices of a cover of size at most half the weight of w. Throws InfeasibleWitness.
std::vector<int> split_witness_to_cover(const SetCoverInstance& j, const Witness& w);

// Labels a_F with a and b_F with b for every chosen set.
Witness cover_to_witness(const SetCoverInstance& j, const std::vector<int>& chosen);

struct Hypergraph {
    int vertices = 0;
    std::vector<std::vector<int>> edges;
};

void validate(const Hypergraph& h);
// Every edge meets both classes; side[v] is 0 or 1.
bool is_proper_coloring(const Hypergraph& h, const std::vector<int>& side);
// Exhaustive search; min_class bounds both class sizes from below.
std::optional<std::vector<int>> find_coloring(const Hypergraph& h, int min_class = 0);

struct HypergraphGadget {
    Graph graph;
    SplitPartition partition;  // clique = hypergraph vertices, independent = edges
};

// Rejects with InvalidInstance hypergraphs that are 2-colorable only with a class below two vertices.
HypergraphGadget hypergraph_to_split(const Hypergraph& h);

// The labeling {a} on one class, {b} on the other, empty on edge vertices.
Witness coloring_to_witness(const Hypergraph& h, const std::vector<int>& side);

// side[v] for each hypergraph vertex. Throws InfeasibleWitness.
std::vector<int> coloring_extraction(const Hypergraph& h, const Witness& w);

}  // namespace dominion
