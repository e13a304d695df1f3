#pragma once

#include "dominion/graph.hpp"
#include "dominion/params.hpp"
#include "dominion/witness.hpp"

namespace dominion {

struct ApproxResult {
    Witness witness;
    long long weight = 0;
    double ratio_bound = 1.0;
};

// Greedy multicover for gamma, gamma_t, gamma_x2 and gamma_tx2.
ApproxResult greedy_multicover(Param p, const Graph& g);
// Greedy over single actions for gamma_2 (select a vertex) and gamma_w2 (add one unit).
ApproxResult greedy_vector(Param p, const Graph& g);
// Base greedy followed by a doubling or recoloring step.
ApproxResult derived_approx(Param p, const Graph& g);
// Dispatches to whichever of the three applies.
ApproxResult approximate(Param p, const Graph& g);

double ratio_bound(Param p, int max_degree);
bool has_approximation(Param p);

}  // namespace dominion
