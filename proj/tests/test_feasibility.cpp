#include <doctest.h>

#include "dominion/errors.hpp"
#include "dominion/families.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

const Param kVertexParams[] = {Param::Gamma,    Param::GammaT,     Param::GammaW2,  Param::GammaSet2,
                               Param::GammaTSet2, Param::Gamma2,   Param::GammaX2,  Param::GammaTX2,
                               Param::RGammaW2, Param::RGamma2,    Param::RGammaX2, Param::RGammaTX2,
                               Param::GammaR};

}  // namespace

TEST_CASE("vertex conditions on tiny graphs") {
    Graph k2 = complete(2);
    CHECK(is_feasible(Param::Gamma, k2, make_int({1, 0})));
    CHECK_FALSE(is_feasible(Param::GammaT, k2, make_int({1, 0})));
    CHECK(is_feasible(Param::GammaT, k2, make_int({1, 1})));
    CHECK(is_feasible(Param::RGammaX2, cycle(4), make_rainbow({kA, kB, kA, kB})));
    Witness roman = make_int({2, 0, 0, 0});
    CHECK(is_feasible(Param::GammaR, star(3), roman));
    CHECK(witness_weight(roman) == 2);
}

TEST_CASE("cover conditions") {
    Graph k2 = complete(2);
    CHECK(is_cover_feasible(Param::Rho, k2, make_edge({1})));
    CHECK(is_cover_feasible(Param::Tau2, k2, make_int({2, 0})));
    CHECK_FALSE(is_cover_feasible(Param::Tau2, k2, make_int({1, 0})));
    Witness ones = make_edge({1, 1, 1, 1});
    CHECK(is_cover_feasible(Param::Rho2, cycle(4), ones));
    CHECK(witness_weight(ones) == 4);
}

TEST_CASE("weights") {
    CHECK(witness_weight(make_int({0, 1, 2})) == 3);
    CHECK(witness_weight(make_rainbow({kAB, kEmpty, kB})) == 3);
    CHECK(witness_weight(make_int({0, 0, 0, 0, 0})) == 0);
}

TEST_CASE("defined_on") {
    CHECK_FALSE(defined_on(Param::GammaTX2, generate(Family::KK2, 3)));
    CHECK(defined_on(Param::RGammaTX2, generate(Family::KC4, 2)));
    CHECK(solve(Param::RGammaTX2, generate(Family::KC4, 2)).value == Value::finite_value(8));
    CHECK(defined_on(Param::Gamma, build(1, {})));
}

TEST_CASE("shape errors") {
    Graph k2 = complete(2);
    CHECK_THROWS_AS(check_shape(Param::Gamma, 2, make_int({1})), Error);
    CHECK_THROWS_AS(check_shape(Param::Gamma, 2, make_int({2, 0})), Error);
    CHECK_THROWS_AS(check_shape(Param::GammaR, 2, make_rainbow({kA, kB})), Error);
    CHECK_THROWS_AS(check_shape(Param::RGammaX2, 2, make_rainbow({kAB, kA})), Error);
}

TEST_CASE("feasibility agrees with independent definitions") {
    for (const auto& g : nonisomorphic_upto(4))
        for (Param p : kVertexParams)
            for_each_vector(g.n(), rank_of(p), [&](const std::vector<int>& f) {
                CHECK(is_feasible(p, g, to_witness(p, f)) == defined_feasible(p, g, f));
            });
}

TEST_CASE("defined_on matches existence of a feasible witness") {
    for (const auto& g : nonisomorphic_upto(5))
        for (Param p : kVertexParams) CHECK(defined_on(p, g) == brute_force(p, g).value.has_value());
}
