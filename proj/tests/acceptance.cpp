// Runs the nine acceptance criteria and prints one PASS/FAIL line each.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dominion/approx.hpp"
#include "dominion/audit.hpp"
#include "dominion/families.hpp"
#include "dominion/reductions.hpp"
#include "dominion/transforms.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

struct Outcome {
    long checks = 0;
    long failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (notes.size() < 5) notes.push_back(what);
    }
};

// Instances of every family with a published value at the usual sizes.
std::vector<std::pair<Family, int>> family_instances() {
    std::vector<std::pair<Family, int>> out;
    for (Family f : kAllFamilies) {
        if (f == Family::SubKOdd || f == Family::SubKnDouble || f == Family::SubStarMinus) continue;
        int lo = std::max(sized_by_copies(f) ? 1 : 3, min_size(f));
        for (int s = lo; s < lo + 3; ++s) out.emplace_back(f, s);
    }
    return out;
}

Outcome family_oracle() {
    Outcome o;
    for (auto [f, s] : family_instances()) {
        Graph g = generate(f, s);
        for (Param p : kMainParams) {
            auto e = expected_value(f, s, p);
            if (!e) continue;
            Value got = solve(p, g).value;
            o.expect(got == *e, std::string(family_name(f)) + " " + std::to_string(s) + " " + info(p).name +
                                    " got " + got.str() + " expected " + e->str());
        }
    }
    return o;
}

Outcome auxiliary_families() {
    Outcome o;
    auto check = [&](Family f, int n, Param p, long long v) {
        Value got = solve(p, generate(f, n)).value;
        o.expect(got == Value::finite_value(v),
                 std::string(family_name(f)) + " " + std::to_string(n) + " " + info(p).name + " got " + got.str());
    };
    for (int n : {2, 3}) {
        check(Family::SubKOdd, n, Param::GammaT, 3 * n + 1);
        check(Family::SubKOdd, n, Param::Gamma2, 2 * n + 1);
        check(Family::SubKOdd, n, Param::GammaW2, 2 * n + 1);
    }
    for (int n : {3, 4}) {
        check(Family::SubKnDouble, n, Param::GammaR, 2 * n - 1);
        check(Family::SubKnDouble, n, Param::GammaW2, n);
        check(Family::SubKnDouble, n, Param::Gamma2, n);
    }
    for (int n : {3, 4, 5}) {
        check(Family::SubStarMinus, n, Param::GammaR, n + 1);
        check(Family::SubStarMinus, n, Param::Gamma, n);
        check(Family::SubStarMinus, n, Param::GammaSet2, 2 * n);
    }
    for (int n : {3, 4}) {
        check(Family::KnStarStar, n, Param::RGammaW2, 2 * n - 2);
        check(Family::KnStarStar, n, Param::GammaR, 2 * n - 2);
        for (Param p : {Param::GammaW2, Param::GammaSet2, Param::GammaTSet2, Param::Gamma2, Param::GammaX2,
                        Param::GammaTX2})
            check(Family::KnStarStar, n, p, n);
    }
    return o;
}

Outcome bound_audit() {
    Outcome o;
    std::vector<Graph> graphs = seeded_corpus(0, 200, 8);
    for (auto [f, s] : family_instances()) graphs.push_back(generate(f, s));
    for (const auto& g : graphs) {
        auto v = audit_graph(g);
        o.expect(v.empty(), v.empty() ? "" : graph_to_string(g) + " violates " + std::to_string(index_of(v[0].row) + 1) +
                                                 "," + std::to_string(index_of(v[0].col) + 1));
    }
    return o;
}

Outcome sharpness() {
    Outcome o;
    int linear = 0;
    for (const auto& bd : bound_table()) linear += bd.kind == BoundKind::Linear;
    o.expect(static_cast<int>(sharpness_assignments().size()) == linear, "not every bounded cell has a family");
    for (const auto& s : sharpness_assignments())
        for (int k : s.sizes) {
            auto r = sharpness_check(s, k);
            o.expect(r.pass, std::to_string(index_of(s.row) + 1) + "," + std::to_string(index_of(s.col) + 1) +
                                 " " + family_name(s.family) + " " + std::to_string(k) + ": " + r.row_value.str() +
                                 " vs " + to_string(r.bound));
        }
    return o;
}

Outcome transform_soundness() {
    Outcome o;
    auto graphs = nonisomorphic_upto(6);
    int direct = 0;
    for (const auto& t : transforms()) {
        direct += !t.projection;
        for (const auto& g : graphs) {
            if (!side_condition_holds(t.side, g)) continue;
            Brute b = brute_force(t.source, g);
            if (!b.value) continue;
            for_each_vector(g.n(), rank_of(t.source), [&](const std::vector<int>& f) {
                if (!defined_feasible(t.source, g, f) || weight_of(t.source, f) > *b.value + 1) return;
                Witness src = to_witness(t.source, f);
                Witness out;
                try {
                    out = apply(t, g, src);
                } catch (const std::exception& e) {
                    o.expect(false, t.id + " threw " + e.what());
                    return;
                }
                std::vector<int> values(out.values.begin(), out.values.end());
                bool feasible = values.size() == static_cast<std::size_t>(g.n()) &&
                                defined_feasible(t.target, g, values);
                bool within = Rational(weight_of(t.target, values)) <= t.a * weight_of(t.source, f) + t.b;
                o.expect(feasible && within, t.id + " on " + graph_to_string(g));
            });
        }
    }
    o.expect(direct == 17, "expected 16 table transforms plus the Roman scaling");
    return o;
}

Outcome identities() {
    Outcome o;
    std::vector<Graph> graphs;
    for (const auto& g : seeded_corpus(0, 200, 8))
        if (g.n() > 0 && g.min_degree() >= 1) graphs.push_back(g);
    for (const auto& g : nonisomorphic_upto(6))
        if (g.min_degree() >= 1) graphs.push_back(g);
    for (const auto& g : graphs) {
        const std::string name = graph_to_string(g);
        o.expect(solve(Param::RGammaX2, g).value == solve_disjoint(Param::GammaGamma, g).value,
                 "rainbow double vs disjoint pair on " + name);
        o.expect(solve(Param::RGammaTX2, g).value == solve_disjoint(Param::GammaTGammaT, g).value,
                 "rainbow total double vs disjoint total pair on " + name);
        Value r2 = solve_cover(Param::Rho2, g).value, t2 = solve_cover(Param::Tau2, g).value;
        o.expect(r2.finite() && t2.finite() && r2.get() + t2.get() == 2LL * g.n(), "cover sum on " + name);
    }
    return o;
}

double base_ratio(Param p, int delta) {
    switch (p) {
        case Param::Gamma:
        case Param::GammaX2: return std::log(delta + 1.0) + 1;
        case Param::GammaT:
        case Param::GammaTX2: return std::log(static_cast<double>(delta)) + 1;
        case Param::Gamma2:
        case Param::GammaW2: return std::log(delta + 2.0) + 1;
        case Param::GammaSet2:
        case Param::GammaR:
        case Param::RGammaSet2: return 2 * base_ratio(Param::Gamma, delta);
        case Param::GammaTSet2:
        case Param::RGammaTSet2: return 2 * base_ratio(Param::GammaT, delta);
        case Param::RGammaW2: return 2 * base_ratio(Param::GammaW2, delta);
        default: return 0;
    }
}

Outcome greedy_ratio() {
    Outcome o;
    const Param params[] = {Param::Gamma,     Param::GammaX2,    Param::GammaT,   Param::GammaTX2,
                            Param::Gamma2,    Param::GammaW2,    Param::GammaSet2, Param::GammaR,
                            Param::RGammaSet2, Param::GammaTSet2, Param::RGammaTSet2, Param::RGammaW2};
    for (const auto& g : seeded_corpus(0, 200, 8))
        for (Param p : params) {
            Solution s = solve(p, g);
            if (!s.value.finite()) continue;
            ApproxResult r = approximate(p, g);
            const std::string name = std::string(info(p).name) + " on " + graph_to_string(g);
            std::vector<int> values(r.witness.values.begin(), r.witness.values.end());
            o.expect(defined_feasible(p, g, values), "infeasible greedy " + name);
            const bool total = p == Param::GammaT || p == Param::GammaTX2 || p == Param::GammaTSet2 ||
                               p == Param::RGammaTSet2;
            if (total && g.max_degree() < 2) continue;
            o.expect(r.weight <= base_ratio(p, g.max_degree()) * s.value.get() + 1e-9, "ratio exceeded for " + name);
        }
    return o;
}

std::vector<int> permuted(const std::vector<int>& masks, const std::vector<int>& perm) {
    std::vector<int> out;
    for (int m : masks) {
        int r = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (m >> i & 1) r |= 1 << perm[i];
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Calls visit for every sorted list of `count` masks in [1, full], one per relabeling class.
void for_each_family(int ground, int count, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> perm(ground);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    const int full = (1 << ground) - 1;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == count) {
            for (const auto& p : perms)
                if (permuted(cur, p) < cur) return;
            visit(cur);
            return;
        }
        for (int m = lo; m <= full; ++m) {
            cur.push_back(m);
            rec(m);
            cur.pop_back();
        }
    };
    rec(1);
}

std::vector<std::vector<int>> members(int ground, const std::vector<int>& masks) {
    std::vector<std::vector<int>> out;
    for (int m : masks) {
        out.emplace_back();
        for (int i = 0; i < ground; ++i)
            if (m >> i & 1) out.back().push_back(i);
    }
    return out;
}

Outcome reduction_suite() {
    Outcome o;
    for (int s = 1; s <= 5; ++s)
        for (int f = 1; f <= 4; ++f)
            for_each_family(s, f, [&](const std::vector<int>& masks) {
                int covered = 0;
                for (int m : masks) covered |= m;
                if (covered != (1 << s) - 1) return;
                SetCoverInstance j{s, members(s, masks)};
                int opt = f + 1;
                for (int sub = 1; sub < (1 << f); ++sub) {
                    int u = 0;
                    for (int i = 0; i < f; ++i)
                        if (sub >> i & 1) u |= masks[i];
                    if (u == (1 << s) - 1) opt = std::min(opt, __builtin_popcount(sub));
                }
                SetCoverGadget g = set_cover_to_split(j);
                Solution r2 = solve(Param::RGamma2, g.graph);
                Value rx = solve(Param::RGammaX2, g.graph).value;
                const std::string name = "set cover " + std::to_string(s) + "/" + std::to_string(f);
                o.expect(r2.value == Value::finite_value(2 * opt) && rx == Value::finite_value(2 * opt),
                         name + " gives " + r2.value.str() + ", " + rx.str() + " for optimum " + std::to_string(opt));
                o.expect(is_split(g.graph).has_value(), name + " gadget is not split");
                o.expect(static_cast<int>(split_witness_to_cover(j, *r2.witness).size()) == opt,
                         name + " extraction is not optimal");
            });
    for (int n = 1; n <= 5; ++n)
        for (int e = 0; e <= 4; ++e) {
            auto visit = [&](const std::vector<int>& masks) {
                Hypergraph h{n, members(n, masks)};
                bool any = false, wide = false;
                for (int mask = 0; mask < (1 << n); ++mask) {
                    bool ok = true;
                    for (int m : masks) {
                        int in = __builtin_popcount(m & mask);
                        if (in == 0 || in == __builtin_popcount(m)) ok = false;
                    }
                    if (!ok) continue;
                    any = true;
                    int ones = __builtin_popcount(mask);
                    wide = wide || (ones >= 2 && n - ones >= 2);
                }
                const std::string name = "hypergraph on " + std::to_string(n) + " with " + std::to_string(e) + " edges";
                if (any && !wide) {
                    bool rejected = false;
                    try {
                        hypergraph_to_split(h);
                    } catch (const Error& err) {
                        rejected = err.code() == ErrorCode::InvalidInstance;
                    }
                    o.expect(rejected, name + " should be rejected");
                    return;
                }
                HypergraphGadget g = hypergraph_to_split(h);
                o.expect(defined_on(Param::RGammaTX2, g.graph) == wide, name + " disagrees with the oracle");
                o.expect(solve(Param::RGammaTX2, g.graph).value.finite() == wide, name + " solver disagrees");
                o.expect(is_split(g.graph).has_value(), name + " gadget is not split");
            };
            if (e == 0) visit({});
            else for_each_family(n, e, visit);
        }
    return o;
}

std::vector<std::vector<std::string>> read_classes(const std::string& path) {
    std::ifstream in(path);
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream words(line);
        out.emplace_back();
        for (std::string w; words >> w;) out.back().push_back(w);
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

Outcome structure() {
    Outcome o;
    Structure s = hasse_and_classes();
    o.expect(s.classes.size() == 4, std::to_string(s.classes.size()) + " classes");
    o.expect(s.linear, "classes are not linearly ordered");
    auto expected = read_classes(std::string(FIXTURE_DIR) + "/classes.txt");
    std::vector<std::vector<std::string>> got;
    for (const auto& c : s.classes) {
        got.emplace_back();
        for (Param p : c) got.back().push_back(info(p).name);
        std::sort(got.back().begin(), got.back().end());
    }
    o.expect(got == expected, "classes differ from the fixture");

    // The encoded diagram, restricted to the main parameters, must reduce to the table's own covers.
    const int n = kParamCount;
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (auto [lo, hi] : covering_pairs()) reach[index_of(lo)][index_of(hi)] = 1;
    for (int m = 0; m < n; ++m)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (reach[a][m] && reach[m][b]) reach[a][b] = 1;
    std::vector<std::pair<Param, Param>> reduced;
    for (Param a : kMainParams)
        for (Param b : kMainParams) {
            if (!reach[index_of(a)][index_of(b)]) continue;
            bool direct = true;
            for (Param m : kMainParams)
                if (reach[index_of(a)][index_of(m)] && reach[index_of(m)][index_of(b)]) direct = false;
            if (direct) reduced.emplace_back(a, b);
        }
    auto from_table = covers_from_table();
    std::sort(reduced.begin(), reduced.end());
    std::sort(from_table.begin(), from_table.end());
    o.expect(reduced == from_table, "encoded covering pairs disagree with the table");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"family oracle", family_oracle},      {"auxiliary families", auxiliary_families},
        {"bound audit", bound_audit},          {"sharpness", sharpness},
        {"transform soundness", transform_soundness}, {"identities", identities},
        {"greedy ratio", greedy_ratio},        {"reductions", reduction_suite},
        {"structure", structure},
    };
    int failed = 0;
    int index = 1;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.expect(false, std::string("threw ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = o.failures == 0;
        failed += !pass;
        std::printf("%s criterion %d (%s): %ld checks, %ld failures, %.1fs\n", pass ? "PASS" : "FAIL", index++, c.name,
                    o.checks, o.failures, secs);
        for (const auto& note : o.notes) std::printf("    %s\n", note.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
