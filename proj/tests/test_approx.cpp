#include <doctest.h>

#include <cmath>

#include "dominion/approx.hpp"
#include "dominion/families.hpp"
#include "support.hpp"

using namespace testing_support;

TEST_CASE("greedy on named graphs") {
    ApproxResult g = approximate(Param::Gamma, star(5));
    CHECK(g.weight == 1);
    CHECK(g.witness.values[0] == 1);
    CHECK(approximate(Param::GammaX2, cycle(4)).weight == 3);
    CHECK(approximate(Param::GammaTX2, generate(Family::KC4, 2)).weight <= (std::log(2.0) + 1) * 8);
    const int star_weight = approximate(Param::Gamma2, star(6)).weight;
    CHECK(star_weight >= 6);
    CHECK(star_weight <= ratio_bound(Param::Gamma2, 6) * 6);
    CHECK(approximate(Param::GammaW2, complete(2)).weight == 2);
    CHECK(approximate(Param::GammaW2, cycle(4)).weight == 2);
}

TEST_CASE("derived approximations") {
    CHECK(approximate(Param::GammaSet2, star(5)).weight == 2);
    CHECK(approximate(Param::GammaR, generate(Family::KK2, 2)).weight == 4);
    ApproxResult r = approximate(Param::RGammaW2, cycle(4));
    CHECK(is_feasible(Param::RGammaW2, cycle(4), r.witness));
    CHECK(r.weight <= 2 * approximate(Param::GammaW2, cycle(4)).weight);
    CHECK(solve(Param::RGammaW2, cycle(4)).value == Value::finite_value(2));
}

TEST_CASE("ratio bounds") {
    CHECK(ratio_bound(Param::Gamma, 3) == doctest::Approx(std::log(4.0) + 1));
    CHECK(ratio_bound(Param::GammaT, 3) == doctest::Approx(std::log(3.0) + 1));
    CHECK(ratio_bound(Param::Gamma2, 3) == doctest::Approx(std::log(5.0) + 1));
    CHECK(ratio_bound(Param::GammaR, 3) == doctest::Approx(2 * (std::log(4.0) + 1)));
    CHECK(ratio_bound(Param::RGammaW2, 3) == doctest::Approx(2 * (std::log(5.0) + 1)));
    CHECK_FALSE(has_approximation(Param::RGammaX2));
}

TEST_CASE("greedy output is feasible on every small graph") {
    for (const auto& g : nonisomorphic_upto(5))
        for (Param p : kMainParams) {
            if (!has_approximation(p) || !defined_on(p, g)) continue;
            ApproxResult r = approximate(p, g);
            CHECK(is_feasible(p, g, r.witness));
            CHECK(r.weight == witness_weight(r.witness));
        }
}
