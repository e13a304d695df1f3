#pragma once

// Shared helpers for the test binaries: graph enumeration, seeded random graphs
// and a brute-force oracle that restates every definition independently of the
// library's feasibility code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "dominion/audit.hpp"
#include "dominion/exact.hpp"
#include "dominion/graph.hpp"
#include "dominion/params.hpp"
#include "dominion/witness.hpp"

namespace testing_support {

using namespace dominion;

inline std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

inline Graph from_mask(int n, std::uint32_t mask) {
    auto pairs = all_pairs(n);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) es.push_back(pairs[i]);
    return build(n, es);
}

// One representative per isomorphism class, smallest edge mask first.
inline std::vector<Graph> nonisomorphic_graphs(int n) {
    auto pairs = all_pairs(n);
    std::vector<int> perm(n);
    std::vector<std::vector<int>> perms;
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        index[pairs[i].first][pairs[i].second] = static_cast<int>(i);
        index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
    }
    const std::uint32_t total = std::uint32_t{1} << pairs.size();
    std::vector<char> seen(total, 0);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (seen[mask]) continue;
        out.push_back(from_mask(n, mask));
        for (const auto& p : perms) {
            std::uint32_t image = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) image |= std::uint32_t{1} << index[p[pairs[i].first]][p[pairs[i].second]];
            seen[image] = 1;
        }
    }
    return out;
}

inline std::vector<Graph> nonisomorphic_upto(int max_n, int min_n = 1) {
    std::vector<Graph> out;
    for (int n = min_n; n <= max_n; ++n) {
        auto part = nonisomorphic_graphs(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

using dominion::random_graph;
using dominion::seeded_corpus;

// ---- independent definitions -------------------------------------------------

inline int rank_of(Param p) {
    switch (p) {
        case Param::Gamma: case Param::GammaT: case Param::Gamma2: case Param::GammaX2:
        case Param::GammaTX2:
            return 2;
        case Param::GammaW2: case Param::GammaSet2: case Param::GammaTSet2: case Param::GammaR:
            return 3;
        case Param::RGamma2: case Param::RGammaX2: case Param::RGammaTX2:
            return 3;  // empty, {a}, {b}
        default:
            return 4;  // empty, {a}, {b}, {a,b}
    }
}

inline bool rainbow_param(Param p) {
    switch (p) {
        case Param::RGammaW2: case Param::RGamma2: case Param::RGammaX2: case Param::RGammaTX2:
        case Param::RGammaSet2: case Param::RGammaTSet2:
            return true;
        default:
            return false;
    }
}

inline int weight_of(Param p, const std::vector<int>& f) {
    int w = 0;
    for (int x : f) w += rainbow_param(p) ? std::popcount(static_cast<unsigned>(x)) : x;
    return w;
}

// Definitions written out one parameter at a time.
inline bool defined_feasible(Param p, const Graph& g, const std::vector<int>& f) {
    const int n = g.n();
    auto open_sum = [&](int v) {
        int s = 0;
        for (int u : g.neighbors(v)) s += f[u];
        return s;
    };
    auto open_union = [&](int v) {
        int s = 0;
        for (int u : g.neighbors(v)) s |= f[u];
        return s;
    };
    for (int v = 0; v < n; ++v) {
        const int own = f[v];
        bool ok = true;
        switch (p) {
            case Param::Gamma: ok = own == 1 || open_sum(v) >= 1; break;
            case Param::GammaT: ok = open_sum(v) >= 1; break;
            case Param::GammaW2: ok = own > 0 || open_sum(v) >= 2; break;
            case Param::GammaSet2: ok = own + open_sum(v) >= 2; break;
            case Param::GammaTSet2: ok = open_sum(v) >= 2; break;
            case Param::Gamma2: ok = own == 1 || open_sum(v) >= 2; break;
            case Param::GammaX2: ok = own + open_sum(v) >= 2; break;
            case Param::GammaTX2: ok = open_sum(v) >= 2; break;
            case Param::RGammaW2: ok = own != 0 || open_union(v) == 3; break;
            case Param::RGamma2: ok = own != 0 || open_union(v) == 3; break;
            case Param::RGammaX2: ok = (own | open_union(v)) == 3; break;
            case Param::RGammaTX2: ok = open_union(v) == 3; break;
            case Param::RGammaSet2: ok = (own | open_union(v)) == 3; break;
            case Param::RGammaTSet2: ok = open_union(v) == 3; break;
            case Param::GammaR: {
                bool strong = false;
                for (int u : g.neighbors(v)) strong = strong || f[u] == 2;
                ok = own > 0 || strong;
                break;
            }
            default: ok = false;
        }
        if (!ok) return false;
    }
    return true;
}

// Calls visit for every witness vector of p on g (values 0..rank-1 per vertex).
inline void for_each_vector(int n, int rank, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> f(n, 0);
    for (;;) {
        visit(f);
        int i = n - 1;
        while (i >= 0 && f[i] == rank - 1) f[i--] = 0;
        if (i < 0) return;
        ++f[i];
    }
}

struct Brute {
    std::optional<int> value;
    std::vector<int> least;  // lexicographically least optimum
};

inline Brute brute_force(Param p, const Graph& g) {
    Brute out;
    for_each_vector(g.n(), rank_of(p), [&](const std::vector<int>& f) {
        if (!defined_feasible(p, g, f)) return;
        int w = weight_of(p, f);
        if (!out.value || w < *out.value) {
            out.value = w;
            out.least = f;
        }
    });
    return out;
}

inline Witness to_witness(Param p, const std::vector<int>& f) {
    Witness w;
    w.kind = kind_for(p);
    for (int x : f) w.values.push_back(static_cast<std::uint8_t>(x));
    return w;
}

}  // namespace testing_support
