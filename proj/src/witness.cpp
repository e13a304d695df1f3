#include "dominion/witness.hpp"

#include <bit>

#include "dominion/errors.hpp"
#include "dominion/exact.hpp"

namespace dominion {

WitnessKind kind_for(Param p) {
    if (p == Param::Rho || p == Param::Rho2) return WitnessKind::Edge;
    return is_rainbow(p) ? WitnessKind::Rainbow : WitnessKind::Int;
}

Witness make_int(std::vector<std::uint8_t> values) { return {WitnessKind::Int, std::move(values)}; }
Witness make_rainbow(std::vector<std::uint8_t> values) {
    return {WitnessKind::Rainbow, std::move(values)};
}
Witness make_edge(std::vector<std::uint8_t> values) { return {WitnessKind::Edge, std::move(values)}; }

Witness set_witness(int n, const std::vector<Vertex>& members) {
    Witness w{WitnessKind::Int, std::vector<std::uint8_t>(n, 0)};
    for (Vertex v : members) w.values.at(v) = 1;
    return w;
}

int witness_weight(const Witness& w) {
    int total = 0;
    for (auto x : w.values) total += w.kind == WitnessKind::Rainbow ? std::popcount(x) : x;
    return total;
}

std::vector<Vertex> support(const Witness& w) {
    std::vector<Vertex> out;
    for (int v = 0; v < static_cast<int>(w.values.size()); ++v)
        if (w.values[v]) out.push_back(v);
    return out;
}

void check_shape(Param p, int domain_size, const Witness& w) {
    if (w.kind != kind_for(p))
        throw Error(ErrorCode::WitnessShapeMismatch,
                    std::string("wrong witness kind for ") + info(p).name);
    if (static_cast<int>(w.values.size()) != domain_size)
        throw Error(ErrorCode::WitnessShapeMismatch,
                    "witness has " + std::to_string(w.values.size()) + " entries, expected " +
                        std::to_string(domain_size));
    int limit = codomain_size(p);
    for (auto x : w.values)
        if (x >= limit)
            throw Error(ErrorCode::CodomainViolation,
                        "value " + std::to_string(x) + " outside the codomain of " + info(p).name);
}

bool vertex_satisfied(Param p, const Graph& g, const Witness& w, Vertex v) {
    const auto& pi = info(p);
    const auto& f = w.values;
    if (pi.hood == Hood::Outer && f[v] != 0) return true;
    if (pi.rule == Rule::Roman) {
        for (Vertex u : g.neighbors(v))
            if (f[u] == 2) return true;
        return false;
    }
    int acc = 0;
    auto add = [&](Vertex u) { acc = pi.rule == Rule::Union ? (acc | f[u]) : acc + f[u]; };
    if (pi.hood == Hood::Closed) add(v);
    for (Vertex u : g.neighbors(v)) add(u);
    return pi.rule == Rule::Union ? acc == kAB : acc >= pi.demand;
}

bool is_feasible(Param p, const Graph& g, const Witness& w) {
    if (is_cover(p)) return is_cover_feasible(p, g, w);
    check_shape(p, g.n(), w);
    for (Vertex v = 0; v < g.n(); ++v)
        if (!vertex_satisfied(p, g, w, v)) return false;
    return true;
}

bool is_cover_feasible(Param p, const MultiGraph& g, const Witness& w) {
    if (!is_cover(p))
        throw Error(ErrorCode::UndefinedParameter, std::string(info(p).name) + " is not a cover parameter");
    if (p == Param::Tau2) {
        check_shape(p, g.n(), w);
        for (auto [u, v] : g.edges())
            if (w.values[u] + w.values[v] < 2) return false;
        return true;
    }
    check_shape(p, static_cast<int>(g.edges().size()), w);
    std::vector<int> load(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0)
            throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v) + " is isolated");
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        load[g.edges()[i].first] += w.values[i];
        load[g.edges()[i].second] += w.values[i];
    }
    int need = info(p).demand;
    for (int x : load)
        if (x < need) return false;
    return true;
}

bool is_cover_feasible(Param p, const Graph& g, const Witness& w) {
    return is_cover_feasible(p, as_multigraph(g), w);
}

bool splits_into_two_total_dominating_sets(const Graph& g) {
    int n = g.n();
    if (n == 0) return true;
    if (g.min_degree() < 2) return false;
    if (n > 24) throw Error(ErrorCode::GraphTooLarge, "bipartition search limited to n <= 24");
    std::vector<std::uint32_t> nb(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v)) nb[v] |= 1u << u;
    std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    // vertex 0 fixed in the first class
    for (std::uint32_t a = 1; a <= all; a += 2) {
        std::uint32_t b = all & ~a;
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v) ok = (nb[v] & a) && (nb[v] & b);
        if (ok) return true;
    }
    return false;
}

bool defined_on(Param p, const Graph& g) {
    switch (p) {
        case Param::Gamma:
        case Param::GammaW2:
        case Param::GammaSet2:
        case Param::Gamma2:
        case Param::RGammaW2:
        case Param::RGamma2:
        case Param::GammaR:
        case Param::RGammaSet2:
        case Param::Tau2:
            return true;
        case Param::GammaT:
        case Param::GammaTSet2:
        case Param::GammaX2:
        case Param::RGammaX2:
        case Param::GammaGamma:
        case Param::RGammaTSet2:
        case Param::Rho:
        case Param::Rho2:
            return g.n() == 0 || g.min_degree() >= 1;
        case Param::GammaTX2:
            return g.n() == 0 || g.min_degree() >= 2;
        case Param::RGammaTX2:
        case Param::GammaTGammaT: {
            if (g.n() > 0 && g.min_degree() < 2) return false;
            for (const auto& comp : components(g)) {
                Graph h = induced(g, comp);
                if (h.n() <= 20) {
                    if (!splits_into_two_total_dominating_sets(h)) return false;
                } else if (!solve(Param::RGammaTX2, h).value.finite()) {
                    return false;
                }
            }
            return true;
        }
    }
    return false;
}

}  // namespace dominion
