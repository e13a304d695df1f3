#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "dominion/params.hpp"

namespace dominion {

using Rational = boost::rational<long long>;

enum class BoundKind { Equal, Linear, NoBound };
enum class Condition { All, AtLeastOneEdge, NotK1 };

// row <= a * col + b whenever both parameters are finite and the condition holds.
struct Bound {
    Param row;
    Param col;
    BoundKind kind;
    Rational a{1};
    Rational b{0};
    Condition condition = Condition::All;

    Rational at(long long x) const { return a * x + b; }
    std::string str() const;
};

std::string to_string(const Rational& r);
const char* condition_name(Condition c);

// All 169 cells, row major over the main parameters.
const std::vector<Bound>& bound_table();
const Bound& bound(Param row, Param col);

}  // namespace dominion
