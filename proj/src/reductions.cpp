#include "dominion/reductions.hpp"

#include <algorithm>
#include <string>

#include "dominion/errors.hpp"

namespace dominion {

namespace {

void require_feasible(Param p, const Graph& g, const Witness& w) {
    if (!is_feasible(p, g, w)) throw Error(ErrorCode::InfeasibleWitness, "witness is not feasible");
}

}  // namespace

void validate(const SetCoverInstance& j) {
    if (j.ground < 1) throw Error(ErrorCode::InvalidInstance, "ground set is empty");
    if (j.sets.empty()) throw Error(ErrorCode::InvalidInstance, "family is empty");
    std::vector<char> seen(j.ground, 0);
    for (const auto& s : j.sets)
        for (int x : s) {
            if (x < 0 || x >= j.ground)
                throw Error(ErrorCode::InvalidInstance, "element " + std::to_string(x) + " outside the ground set");
            seen[x] = 1;
        }
    for (int x = 0; x < j.ground; ++x)
        if (!seen[x]) throw Error(ErrorCode::InvalidInstance, "element " + std::to_string(x) + " is in no set");
}

bool is_cover(const SetCoverInstance& j, const std::vector<int>& chosen) {
    std::vector<char> seen(j.ground, 0);
    for (int i : chosen) {
        if (i < 0 || i >= static_cast<int>(j.sets.size())) return false;
        for (int x : j.sets[i]) seen[x] = 1;
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

SetCoverGadget set_cover_to_split(const SetCoverInstance& j) {
    validate(j);
    const int f = static_cast<int>(j.sets.size()), s = j.ground;
    SetCoverGadget out;
    std::vector<Edge> edges;
    for (int i = 0; i < f; ++i) {
        out.a.push_back(i);
        out.b.push_back(f + i);
    }
    for (int u = 0; u < 2 * f; ++u)
        for (int v = u + 1; v < 2 * f; ++v) edges.emplace_back(u, v);
    for (int x = 0; x < s; ++x) out.copies.push_back({2 * f + x, 2 * f + s + x, 2 * f + 2 * s + x});
    for (int i = 0; i < f; ++i) {
        std::vector<int> members = j.sets[i];
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int x : members)
            for (Vertex c : out.copies[x]) {
                edges.emplace_back(out.a[i], c);
                edges.emplace_back(out.b[i], c);
            }
    }
    out.graph = build(2 * f + 3 * s, edges);
    for (int v = 0; v < 2 * f; ++v) out.partition.clique.push_back(v);
    for (int v = 2 * f; v < 2 * f + 3 * s; ++v) out.partition.independent.push_back(v);
    return out;
}

Witness cover_to_witness(const SetCoverInstance& j, const std::vector<int>& chosen) {
    const int f = static_cast<int>(j.sets.size());
    std::vector<std::uint8_t> labels(2 * f + 3 * j.ground, kEmpty);
    for (int i : chosen) {
        labels[i] = kA;
        labels[f + i] = kB;
    }
    return make_rainbow(labels);
}

std::vector<int> split_witness_to_cover(const SetCoverInstance& j, const Witness& w) {
    SetCoverGadget gadget = set_cover_to_split(j);
    const Graph& g = gadget.graph;
    check_shape(Param::RGamma2, g.n(), w);
    require_feasible(Param::RGamma2, g, w);
    const int f = static_cast<int>(j.sets.size());
    Witness cur = w;

    // Clear labels on element copies. A labeled copy whose sibling is empty sees both
    // colors through the shared neighborhood, so it can be dropped outright; when all
    // three copies are labeled they are swapped for a_F = {a}, b_F = {b}.
    for (int x = 0; x < j.ground; ++x) {
        const auto& cp = gadget.copies[x];
        int labeled = 0;
        for (Vertex c : cp) labeled += cur.values[c] != kEmpty;
        if (labeled == 0) continue;
        if (labeled == 3) {
            int owner = 0;
            while (std::find(j.sets[owner].begin(), j.sets[owner].end(), x) == j.sets[owner].end()) ++owner;
            cur.values[gadget.a[owner]] |= kA;
            cur.values[gadget.b[owner]] |= kB;
            if (cur.values[gadget.a[owner]] == kAB) cur.values[gadget.a[owner]] = kA;
            if (cur.values[gadget.b[owner]] == kAB) cur.values[gadget.b[owner]] = kB;
        }
        for (Vertex c : cp) cur.values[c] = kEmpty;
        require_feasible(Param::RGamma2, g, cur);
    }

    // Every copy now sees both colors among the sets containing it.
    std::vector<int> with_a, with_b;
    for (int i = 0; i < f; ++i) {
        std::uint8_t seen = cur.values[gadget.a[i]] | cur.values[gadget.b[i]];
        if (seen & kA) with_a.push_back(i);
        if (seen & kB) with_b.push_back(i);
    }
    std::vector<int> chosen = with_a.size() <= with_b.size() ? with_a : with_b;
    if (!is_cover(j, chosen)) throw Error(ErrorCode::InfeasibleWitness, "extracted family is not a cover");
    return chosen;
}

void validate(const Hypergraph& h) {
    if (h.vertices < 0) throw Error(ErrorCode::InvalidInstance, "negative vertex count");
    for (const auto& e : h.edges) {
        if (e.empty()) throw Error(ErrorCode::InvalidInstance, "empty hyperedge");
        for (int v : e)
            if (v < 0 || v >= h.vertices)
                throw Error(ErrorCode::InvalidInstance, "hyperedge vertex " + std::to_string(v) + " out of range");
    }
}

bool is_proper_coloring(const Hypergraph& h, const std::vector<int>& side) {
    if (static_cast<int>(side.size()) != h.vertices) return false;
    for (const auto& e : h.edges) {
        bool zero = false, one = false;
        for (int v : e) (side[v] ? one : zero) = true;
        if (!zero || !one) return false;
    }
    return true;
}

std::optional<std::vector<int>> find_coloring(const Hypergraph& h, int min_class) {
    validate(h);
    if (h.vertices > 24) throw Error(ErrorCode::GraphTooLarge, "coloring search limited to 24 vertices");
    std::vector<int> side(h.vertices);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << h.vertices); ++mask) {
        int ones = __builtin_popcount(mask);
        if (ones < min_class || h.vertices - ones < min_class) continue;
        for (int v = 0; v < h.vertices; ++v) side[v] = (mask >> v) & 1;
        if (is_proper_coloring(h, side)) return side;
    }
    return std::nullopt;
}

HypergraphGadget hypergraph_to_split(const Hypergraph& h) {
    validate(h);
    if (find_coloring(h) && !find_coloring(h, 2))
        throw Error(ErrorCode::InvalidInstance, "every 2-coloring has a class with fewer than two vertices");
    const int n = h.vertices;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        std::vector<int> members = h.edges[e];
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int v : members) edges.emplace_back(v, n + static_cast<int>(e));
    }
    HypergraphGadget out;
    out.graph = build(n + static_cast<int>(h.edges.size()), edges);
    for (int v = 0; v < out.graph.n(); ++v) (v < n ? out.partition.clique : out.partition.independent).push_back(v);
    return out;
}

Witness coloring_to_witness(const Hypergraph& h, const std::vector<int>& side) {
    std::vector<std::uint8_t> labels(h.vertices + h.edges.size(), kEmpty);
    for (int v = 0; v < h.vertices; ++v) labels[v] = side.at(v) ? kB : kA;
    return make_rainbow(labels);
}

std::vector<int> coloring_extraction(const Hypergraph& h, const Witness& w) {
    HypergraphGadget gadget = hypergraph_to_split(h);
    check_shape(Param::RGammaTX2, gadget.graph.n(), w);
    require_feasible(Param::RGammaTX2, gadget.graph, w);
    Witness cur = w;
    for (int v = 0; v < h.vertices; ++v)
        if (cur.values[v] == kEmpty) cur.values[v] = kA;
    require_feasible(Param::RGammaTX2, gadget.graph, cur);
    std::vector<int> side(h.vertices);
    for (int v = 0; v < h.vertices; ++v) side[v] = cur.values[v] == kB;
    if (!is_proper_coloring(h, side)) throw Error(ErrorCode::InfeasibleWitness, "extracted classes are not independent");
    return side;
}

}  // namespace dominion
