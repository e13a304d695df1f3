#include "dominion/bounds.hpp"

#include "dominion/errors.hpp"

namespace dominion {

namespace {

struct Cell {
    char tag;  // '=', 'N' or 'L'
    long long num = 1, den = 1, b = 0, b_den = 1;
    Condition cond = Condition::All;
};

constexpr Cell E{'='};
constexpr Cell N{'N'};
constexpr Cell L(long long num, long long b = 0, long long den = 1) { return {'L', num, den, b}; }
constexpr Cell Edge(Cell c) { return {c.tag, c.num, c.den, c.b, c.b_den, Condition::AtLeastOneEdge}; }
// (3x - 1) / 2
constexpr Cell kThreeHalves{'L', 3, 2, -1, 2};

const Cell kCells[kMainCount][kMainCount] = {
    {E, L(1), L(1), L(1, -1), L(1, -1), L(1), L(1, -1), L(1, -1), L(1), L(1), L(1, 0, 2), L(1, 0, 2),
     Edge(L(1, -1))},
    {L(2), E, kThreeHalves, L(1), L(1, -1), kThreeHalves, L(1), L(1, -1), L(1), L(1), L(1),
     L(1, 0, 2), L(1)},
    {L(2), L(2), E, L(1), L(1), L(1), L(1), L(1), L(1), L(1), L(1), L(1), L(1)},
    {L(2), L(2), Edge(L(2, -1)), E, L(1), Edge(L(2, -1)), L(1), L(1), Edge(L(2, -1)), Edge(L(2, -1)),
     L(1), L(1), Edge(L(2, -2))},
    {L(4), L(2), L(2), L(2), E, L(2), L(2), L(1), L(2), L(2), L(2), L(1), L(2)},
    {N, N, N, N, N, E, L(1), L(1), N, L(1), L(1), L(1), N},
    {N, N, N, N, N, L(2, -1), E, L(1), N, L(2, -1), L(1), L(1), N},
    {N, N, N, N, N, L(3, -2), L(2, -1), E, N, L(3, -2), L(2, -1), L(1), N},
    {L(2), L(2), {'L', 2, 1, -2, 1, Condition::NotK1}, L(2, -2), L(2, -2), {'L', 2, 1, -2, 1, Condition::NotK1}, L(2, -2), L(2, -2), E,
     L(1), L(1), L(1), L(1)},
    {N, N, N, N, N, N, N, N, N, E, L(1), L(1), N},
    {N, N, N, N, N, N, N, N, N, L(2), E, L(1), N},
    {N, N, N, N, N, N, N, N, N, N, N, E, N},
    {L(2), L(2), L(2, -1), L(2, -2), L(2, -2), L(2, -1), L(2, -2), L(2, -2), L(3, 0, 2), L(3, 0, 2),
     L(1), L(1), E},
};

std::vector<Bound> make_table() {
    std::vector<Bound> out;
    for (int r = 0; r < kMainCount; ++r)
        for (int c = 0; c < kMainCount; ++c) {
            const Cell& cell = kCells[r][c];
            Bound bd{main_param(r), main_param(c), BoundKind::Linear};
            bd.condition = cell.cond;
            if (cell.tag == '=') {
                bd.kind = BoundKind::Equal;
            } else if (cell.tag == 'N') {
                bd.kind = BoundKind::NoBound;
            } else {
                bd.a = Rational(cell.num, cell.den);
                bd.b = Rational(cell.b, cell.b_den);
            }
            out.push_back(bd);
        }
    return out;
}

}  // namespace

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::All: return "all";
        case Condition::AtLeastOneEdge: return "at_least_one_edge";
        case Condition::NotK1: return "not_k1";
    }
    return "?";
}

std::string Bound::str() const {
    if (kind == BoundKind::Equal) return "=";
    if (kind == BoundKind::NoBound) return "no_bound";
    std::string s = a == 1 ? "" : to_string(a) + "*";
    s += info(col).name;
    if (b > 0) s += "+" + to_string(b);
    if (b < 0) s += to_string(b);
    return s;
}

const std::vector<Bound>& bound_table() {
    static const std::vector<Bound> table = make_table();
    return table;
}

const Bound& bound(Param row, Param col) {
    if (!is_main(row) || !is_main(col))
        throw Error(ErrorCode::UnknownName, "bound table covers the thirteen main parameters only");
    return bound_table()[index_of(row) * kMainCount + index_of(col)];
}

}  // namespace dominion
