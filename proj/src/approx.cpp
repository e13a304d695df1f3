#include "dominion/approx.hpp"

#include <cmath>

#include "dominion/errors.hpp"
#include "dominion/transforms.hpp"

namespace dominion {

namespace {

void require_defined(Param p, const Graph& g) {
    if (!defined_on(p, g))
        throw Error(ErrorCode::UndefinedParameter, std::string(info(p).name) + " is undefined on this graph");
}

ApproxResult finish(Param p, const Graph& g, Witness w) {
    ApproxResult r;
    r.weight = witness_weight(w);
    r.witness = std::move(w);
    r.ratio_bound = ratio_bound(p, g.n() ? g.max_degree() : 0);
    return r;
}

Witness doubled_labels(const Witness& set) {
    Witness out = make_rainbow(std::vector<std::uint8_t>(set.values.size(), kEmpty));
    for (std::size_t v = 0; v < set.values.size(); ++v)
        if (set.values[v]) out.values[v] = kAB;
    return out;
}

}  // namespace

bool has_approximation(Param p) {
    switch (p) {
        case Param::Gamma:
        case Param::GammaT:
        case Param::GammaX2:
        case Param::GammaTX2:
        case Param::Gamma2:
        case Param::GammaW2:
        case Param::GammaSet2:
        case Param::GammaTSet2:
        case Param::RGammaW2:
        case Param::GammaR:
        case Param::RGammaSet2:
        case Param::RGammaTSet2:
            return true;
        default:
            return false;
    }
}

double ratio_bound(Param p, int max_degree) {
    const double d = max_degree;
    const double closed = std::log(d + 1) + 1;
    const double open = std::log(std::max(d, 1.0)) + 1;
    const double vector = std::log(d + 2) + 1;
    switch (p) {
        case Param::Gamma:
        case Param::GammaX2:
            return closed;
        case Param::GammaT:
        case Param::GammaTX2:
            return open;
        case Param::Gamma2:
        case Param::GammaW2:
            return vector;
        case Param::GammaSet2:
        case Param::GammaR:
        case Param::RGammaSet2:
            return 2 * closed;
        case Param::GammaTSet2:
        case Param::RGammaTSet2:
            return 2 * open;
        case Param::RGammaW2:
            return 2 * vector;
        default:
            throw Error(ErrorCode::UndefinedParameter,
                        std::string("no approximation for ") + info(p).name);
    }
}

ApproxResult greedy_multicover(Param p, const Graph& g) {
    int demand;
    bool closed;
    switch (p) {
        case Param::Gamma: demand = 1; closed = true; break;
        case Param::GammaT: demand = 1; closed = false; break;
        case Param::GammaX2: demand = 2; closed = true; break;
        case Param::GammaTX2: demand = 2; closed = false; break;
        default:
            throw Error(ErrorCode::UndefinedParameter,
                        std::string("multicover greedy does not handle ") + info(p).name);
    }
    require_defined(p, g);
    const int n = g.n();
    std::vector<int> residual(n, demand);
    std::vector<std::uint8_t> chosen(n, 0);
    auto reach = [&](Vertex u) {
        std::vector<Vertex> out = g.neighbors(u);
        if (closed) out.push_back(u);
        return out;
    };
    for (;;) {
        int best = -1, gain = 0;
        for (Vertex u = 0; u < n; ++u) {
            if (chosen[u]) continue;
            int c = 0;
            for (Vertex v : reach(u)) c += residual[v] > 0;
            if (c > gain) {
                gain = c;
                best = u;
            }
        }
        if (best < 0) break;
        chosen[best] = 1;
        for (Vertex v : reach(best))
            if (residual[v] > 0) --residual[v];
    }
    return finish(p, g, make_int(chosen));
}

ApproxResult greedy_vector(Param p, const Graph& g) {
    if (p != Param::Gamma2 && p != Param::GammaW2)
        throw Error(ErrorCode::UndefinedParameter,
                    std::string("vector greedy does not handle ") + info(p).name);
    const int n = g.n();
    const int top = p == Param::Gamma2 ? 1 : 2;
    std::vector<std::uint8_t> f(n, 0);
    std::vector<int> seen(n, 0);  // weight on the open neighborhood
    auto residual = [&](Vertex v) { return f[v] ? 0 : std::max(0, 2 - seen[v]); };
    // Demand removed by raising u by one unit.
    auto gain = [&](Vertex u) {
        int c = f[u] == 0 ? residual(u) : 0;
        for (Vertex v : g.neighbors(u)) c += residual(v) > 0;
        return c;
    };
    for (;;) {
        int best = -1, most = 0;
        for (Vertex u = 0; u < n; ++u) {
            if (f[u] >= top) continue;
            int c = gain(u);
            if (c > most) {
                most = c;
                best = u;
            }
        }
        if (best < 0) break;
        ++f[best];
        for (Vertex v : g.neighbors(best)) ++seen[v];
    }
    return finish(p, g, make_int(f));
}

ApproxResult derived_approx(Param p, const Graph& g) {
    require_defined(p, g);
    switch (p) {
        case Param::GammaSet2:
            return finish(p, g, apply(find_transform("4,1"), g, greedy_multicover(Param::Gamma, g).witness));
        case Param::GammaR:
            return finish(p, g, apply(find_transform("13,1"), g, greedy_multicover(Param::Gamma, g).witness));
        case Param::GammaTSet2:
            return finish(p, g, apply(find_transform("5,2"), g, greedy_multicover(Param::GammaT, g).witness));
        case Param::RGammaSet2:
            return finish(p, g, doubled_labels(greedy_multicover(Param::Gamma, g).witness));
        case Param::RGammaTSet2:
            return finish(p, g, doubled_labels(greedy_multicover(Param::GammaT, g).witness));
        case Param::RGammaW2: {
            Witness base = greedy_vector(Param::GammaW2, g).witness;
            if (g.n() <= 1) return finish(p, g, make_rainbow(std::vector<std::uint8_t>(g.n(), kA)));
            return finish(p, g, apply(find_transform("9,3"), g, base));
        }
        default:
            throw Error(ErrorCode::UndefinedParameter,
                        std::string("no derived approximation for ") + info(p).name);
    }
}

ApproxResult approximate(Param p, const Graph& g) {
    switch (p) {
        case Param::Gamma:
        case Param::GammaT:
        case Param::GammaX2:
        case Param::GammaTX2:
            return greedy_multicover(p, g);
        case Param::Gamma2:
        case Param::GammaW2:
            return greedy_vector(p, g);
        default:
            return derived_approx(p, g);
    }
}

}  // namespace dominion
