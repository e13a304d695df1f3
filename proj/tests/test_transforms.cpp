#include <doctest.h>

#include "dominion/errors.hpp"
#include "dominion/families.hpp"
#include "dominion/transforms.hpp"
#include "support.hpp"

using namespace testing_support;

TEST_CASE("transform lookup") {
    CHECK(find_transform("4,1").target == Param::GammaSet2);
    CHECK(find_transform("gamma_set2,gamma").id == "4,1");
    CHECK(find_transform("gamma<gamma_t").projection);
    CHECK(find_transform(Param::GammaT, Param::GammaW2) != nullptr);
    CHECK_THROWS_AS(find_transform("2,1"), Error);
    int direct = 0;
    for (const auto& t : transforms()) direct += !t.projection;
    CHECK(direct == 17);
}

TEST_CASE("doubling a dominating set") {
    Witness out = apply(find_transform("4,1"), complete(2), make_int({1, 0}));
    CHECK(out.values == std::vector<std::uint8_t>{2, 0});
}

TEST_CASE("total domination from weak 2-domination on S(K5)") {
    Graph g = generate(Family::SubKOdd, 2);
    Solution src = solve(Param::GammaW2, g);
    REQUIRE(src.value == Value::finite_value(5));
    Witness out = apply(find_transform("2,3"), g, *src.witness);
    CHECK(is_feasible(Param::GammaT, g, out));
    CHECK(witness_weight(out) <= 7);
}

TEST_CASE("dominating set from a {2}-function") {
    Witness out = apply(find_transform("1,4"), star(3), make_int({2, 0, 0, 0}));
    CHECK(is_feasible(Param::Gamma, star(3), out));
    CHECK(witness_weight(out) == 1);
}

TEST_CASE("double domination from 2-domination on C4") {
    Witness out = apply(find_transform("7,6"), cycle(4), make_int({1, 0, 1, 0}));
    CHECK(is_feasible(Param::GammaX2, cycle(4), out));
    CHECK(witness_weight(out) <= 3);
}

TEST_CASE("rainbow recoloring stays within twice the source") {
    const Transform& t = find_transform("11,10");
    for (const auto& g : seeded_corpus(11, 60, 7)) {
        if (!side_condition_holds(t.side, g) || !defined_on(Param::RGamma2, g)) continue;
        std::mt19937_64 rng(g.n() * 31 + g.m());
        // Start from the all-{a} witness thinned at random while it stays feasible.
        Witness w = make_rainbow(std::vector<std::uint8_t>(g.n(), kA));
        for (int v = 0; v < g.n(); ++v) w.values[v] = rng() % 2 ? kA : kB;
        for (int v = 0; v < g.n(); ++v) {
            auto keep = w.values[v];
            w.values[v] = kEmpty;
            if (!is_feasible(Param::RGamma2, g, w)) w.values[v] = keep;
        }
        REQUIRE(is_feasible(Param::RGamma2, g, w));
        TransformResult r = run(t, g, w);
        CHECK(is_feasible(Param::RGammaX2, g, r.witness));
        CHECK(witness_weight(r.witness) <= 2 * witness_weight(w));
        int a = 0, b = 0;
        for (auto l : w.values) {
            a += l == kA;
            b += l == kB;
        }
        CHECK(r.steps <= a + b);
    }
}

TEST_CASE("guarantee reports") {
    Graph kss = generate(Family::KnStarStar, 3);
    Solution w2 = solve(Param::GammaW2, kss);
    GuaranteeReport rep = verify_guarantee(find_transform("4,3"), kss, *w2.witness);
    CHECK(rep.pass);
    CHECK(rep.target_weight <= 2 * w2.value.get() - 1);

    for (int k : {1, 2, 3}) {
        Graph g = generate(Family::KK2, k);
        Solution t = solve(Param::GammaT, g);
        GuaranteeReport r = verify_guarantee(find_transform("5,3"), g, *solve(Param::GammaW2, g).witness);
        CHECK(r.pass);
        CHECK(r.target_weight == 4 * k);
        CHECK(t.value == Value::finite_value(2 * k));
    }

    GuaranteeReport roman = verify_guarantee(find_transform("1,13"), complete(2), make_int({1, 1}));
    CHECK(roman.pass);
    CHECK(roman.target_weight == 1);
}

TEST_CASE("transform errors") {
    CHECK_THROWS_AS(apply(find_transform("4,1"), complete(2), make_int({0, 0})), Error);
    try {
        apply(find_transform("4,3"), build(2, {}), make_int({1, 1}));
        FAIL("expected a side condition error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SideConditionViolated);
    }
    try {
        apply(find_transform("9,3"), build(1, {}), make_int({1}));
        FAIL("expected a side condition error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SideConditionViolated);
    }
    try {
        apply(find_transform("4,1"), complete(3), make_int({1, 0}));
        FAIL("expected a shape error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WitnessShapeMismatch);
    }
}
