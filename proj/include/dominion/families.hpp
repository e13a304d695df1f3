#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dominion/exact.hpp"
#include "dominion/graph.hpp"
#include "dominion/params.hpp"

namespace dominion {

enum class Family {
    KK2,          // k copies of K2
    KC4,          // k copies of C4
    KnStarStar,   // K_n with two triangles glued on every edge
    KH,           // k copies of the 6-vertex double star
    KK44,         // k copies of K_{4,4}
    Fan3,         // n triangles sharing one vertex
    Fan4,         // n four-cycles sharing one vertex
    Star,         // K_{1,n}
    SubK3Multi,   // subdivision of K_3 with every edge n-fold
    Qn,           // two hubs joined by n paths with two inner vertices
    Tn,
    SubKOdd,      // subdivision of K_{2n+1}
    SubKnDouble,  // subdivision of K_n with every edge doubled
    SubStarMinus, // subdivided K_{1,n} with one leaf removed
};

inline constexpr Family kAllFamilies[] = {
    Family::KK2,  Family::KC4,        Family::KnStarStar, Family::KH,      Family::KK44,
    Family::Fan3, Family::Fan4,       Family::Star,       Family::SubK3Multi, Family::Qn,
    Family::Tn,   Family::SubKOdd,    Family::SubKnDouble, Family::SubStarMinus};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
int min_size(Family f);
// Families whose size parameter counts copies (k) rather than n.
bool sized_by_copies(Family f);

// Vertex layouts:
//   kG: copy i occupies [i*|G|, (i+1)*|G|).
//   K_n**: originals 0..n-1, then for each pair x<y (lexicographic) two triangle vertices.
//   H: centers 0,1; leaves 2,3 on 0 and 4,5 on 1.
//   F_n^3: center 0, triangle i uses 1+2i, 2+2i.
//   F_n^4: center 0, square i is 0,1+3i,2+3i,3+3i in cyclic order.
//   K_{1,n}: center 0, leaves 1..n.
//   Subdivisions: original vertices first, then one vertex per edge in sorted edge order.
//   Q_n: hubs 0,1; path i is 0, 2+2i, 3+2i, 1.
//   T_n: v_1..v_n, w_1..w_n, s_1..s_3, t_1..t_5.
//   S(K_{1,n})^-: S(K_{1,n}) without leaf n, later ids shifted down by one.
Graph generate(Family f, int size);

// Published value of p on the family member, Infinite when a degree condition
// rules p out, nullopt when no value is recorded.
std::optional<Value> expected_value(Family f, int size, Param p);

}  // namespace dominion
