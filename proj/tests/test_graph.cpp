#include <doctest.h>

#include <sstream>

#include "dominion/errors.hpp"
#include "dominion/exact.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> perm(a.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.adjacent(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool split_by_search(const Graph& g) {
    for (std::uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
        bool ok = true;
        for (int u = 0; u < g.n() && ok; ++u)
            for (int v = u + 1; v < g.n() && ok; ++v) {
                bool cu = mask >> u & 1, cv = mask >> v & 1;
                if (cu && cv && !g.adjacent(u, v)) ok = false;
                if (!cu && !cv && g.adjacent(u, v)) ok = false;
            }
        if (ok) return true;
    }
    return false;
}

void check_invariants(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        const auto& nb = g.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
        for (int u : nb) {
            CHECK(u != v);
            CHECK(u < g.n());
            CHECK(g.adjacent(u, v));
        }
    }
}

}  // namespace

TEST_CASE("build small graphs") {
    Graph k2 = build(2, {{0, 1}});
    CHECK(k2.neighbors(0) == std::vector<Vertex>{1});
    CHECK(k2.neighbors(1) == std::vector<Vertex>{0});
    Graph k1 = build(1, {});
    CHECK(k1.min_degree() == 0);
    CHECK(k1.max_degree() == 0);
    Graph c4 = build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    check_invariants(c4);
    check_invariants(petersen());
}

TEST_CASE("build rejects bad input") {
    CHECK_THROWS_AS(build(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(build(2, {{0, 2}}), Error);
    try {
        build(3, {{1, 1}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SelfLoop);
    }
}

TEST_CASE("closed neighborhoods") {
    CHECK(complete(2).closed_neighborhood(0) == std::vector<Vertex>{0, 1});
    CHECK(build(1, {}).closed_neighborhood(0) == std::vector<Vertex>{0});
    CHECK(cycle(4).closed_neighborhood(1) == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("subdivision") {
    CHECK(isomorphic(subdivide(MultiGraph(2, {{0, 1}})), path(3)));
    CHECK(isomorphic(subdivide(MultiGraph(2, {{0, 1}, {0, 1}})), cycle(4)));
    CHECK(isomorphic(subdivide(as_multigraph(complete(3))), cycle(6)));
    for (const auto& g : seeded_corpus(3, 40, 7)) {
        for (int k : {1, 2}) {
            MultiGraph mg = with_multiplicity(g, k);
            Graph s = subdivide(mg);
            CHECK(s.n() == g.n() + k * g.m());
            CHECK(s.m() == 2 * k * g.m());
            CHECK(is_bipartite(s));
            check_invariants(s);
        }
    }
}

TEST_CASE("disjoint union") {
    Graph three = disjoint_union(complete(2), 3);
    CHECK(three.n() == 6);
    CHECK(three.m() == 3);
    CHECK(disjoint_union(cycle(4), 1) == cycle(4));
    CHECK(solve(Param::Gamma, disjoint_union(cycle(4), 2)).value == Value::finite_value(4));
}

TEST_CASE("split recognition") {
    auto star_split = is_split(star(4));
    REQUIRE(star_split);
    CHECK(star_split->clique == std::vector<Vertex>{0});
    CHECK(star_split->independent == std::vector<Vertex>{1, 2, 3, 4});
    CHECK_FALSE(is_split(cycle(4)));
    for (const auto& g : nonisomorphic_upto(6)) {
        auto p = is_split(g);
        CHECK(p.has_value() == split_by_search(g));
        if (p) CHECK(is_split_partition(g, *p));
    }
}

TEST_CASE("graph text round trip") {
    for (const auto& g : seeded_corpus(5, 20, 8)) {
        std::ostringstream out;
        write_graph(out, g);
        std::istringstream in(out.str());
        CHECK(read_graph(in) == g);
    }
    std::istringstream with_comments("c comment\n\np edge 3 2\ne 1 2\nc another\ne 2 3\n");
    CHECK(read_graph(with_comments) == path(3));
    std::istringstream zero_index("p edge 2 1\ne 0 1\n");
    CHECK_THROWS_AS(read_graph(zero_index), Error);
    std::istringstream short_body("p edge 3 2\ne 1 2\n");
    CHECK_THROWS_AS(read_graph(short_body), Error);
}
