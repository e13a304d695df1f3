#include "dominion/audit.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dominion/errors.hpp"

namespace dominion {

namespace {

using F = Family;
constexpr F kNone = static_cast<F>(-1);
constexpr F K2 = F::KK2, C4 = F::KC4, KSS = F::KnStarStar, H = F::KH, K44 = F::KK44, F3 = F::Fan3,
            F4 = F::Fan4, STAR = F::Star, SK3 = F::SubK3Multi, Q = F::Qn, T = F::Tn, SODD = F::SubKOdd,
            SKD = F::SubKnDouble, SSM = F::SubStarMinus, X = kNone;

// Family per cell; the diagonal is X.
const F kSharp[kMainCount][kMainCount] = {
    {X, C4, C4, KSS, KSS, C4, KSS, KSS, C4, C4, K2, C4, SSM},
    {K2, X, SODD, K2, KSS, SODD, K2, KSS, K2, K2, K2, C4, K2},
    {K2, H, X, K2, H, K2, K2, KSS, K2, K2, K2, K44, K2},
    {K2, H, F4, X, KSS, F4, K2, KSS, F4, F4, K2, K44, SSM},
    {K2, K2, K2, K2, X, K2, K2, KSS, K2, K2, K2, C4, K2},
    {STAR, STAR, STAR, STAR, STAR, X, K2, KSS, STAR, K2, K2, K44, STAR},
    {STAR, STAR, STAR, STAR, STAR, F4, X, KSS, STAR, F4, K2, K44, STAR},
    {Q, Q, Q, Q, Q, F4, F3, X, Q, F4, F3, C4, Q},
    {K2, H, KSS, KSS, KSS, KSS, KSS, KSS, X, K2, K2, K44, K2},
    {STAR, STAR, STAR, STAR, STAR, SK3, SK3, SK3, STAR, X, K2, K44, STAR},
    {STAR, STAR, STAR, STAR, STAR, SK3, SK3, SK3, STAR, C4, X, C4, STAR},
    {T, T, T, T, T, T, T, T, T, T, T, X, T},
    {K2, H, SKD, KSS, KSS, SKD, KSS, KSS, C4, C4, K2, K44, X},
};

constexpr std::pair<int, int> kBracketed[] = {{1, 13}, {4, 3}, {4, 6}, {4, 9}, {4, 10}, {4, 13}};

std::vector<int> default_sizes(Family f) {
    if (sized_by_copies(f)) return {1, 2, 3};
    switch (f) {
        case F::SubKOdd: return {2, 3};
        case F::SubStarMinus: return {3, 4, 5};
        default: return {3, 4};
    }
}

std::vector<SharpnessAssignment> make_assignments() {
    std::vector<SharpnessAssignment> out;
    for (int r = 0; r < kMainCount; ++r)
        for (int c = 0; c < kMainCount; ++c) {
            const Bound& bd = bound(main_param(r), main_param(c));
            if (bd.kind != BoundKind::Linear) continue;
            bool br = std::find(std::begin(kBracketed), std::end(kBracketed), std::pair{r + 1, c + 1}) !=
                      std::end(kBracketed);
            F f = kSharp[r][c];
            out.push_back({main_param(r), main_param(c), f, br, default_sizes(f)});
        }
    return out;
}

bool holds(const Bound& bd, const Graph& g) {
    switch (bd.condition) {
        case Condition::All: return true;
        case Condition::AtLeastOneEdge: return g.m() >= 1;
        case Condition::NotK1: return g.n() != 1;
    }
    return false;
}

// Pointwise order implied by a cell: row <= col for every graph.
bool pointwise(const Bound& bd) {
    if (bd.kind == BoundKind::Equal) return true;
    return bd.kind == BoundKind::Linear && bd.a <= 1 && bd.b <= 0;
}

}  // namespace

std::string bound_table_text() {
    std::ostringstream out;
    for (const auto& bd : bound_table()) {
        out << info(bd.row).name << ' ' << info(bd.col).name << ' ';
        switch (bd.kind) {
            case BoundKind::Equal: out << "equal"; break;
            case BoundKind::NoBound: out << "none"; break;
            case BoundKind::Linear: out << "linear " << to_string(bd.a) << ' ' << to_string(bd.b); break;
        }
        out << ' ' << condition_name(bd.condition) << '\n';
    }
    return out.str();
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.emplace_back(u, v);
    return build(n, es);
}

std::vector<Graph> seeded_corpus(std::uint64_t seed, int count, int max_n) {
    std::mt19937_64 rng(seed);
    const double probs[] = {0.2, 0.5, 0.8};
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        int n = std::uniform_int_distribution<int>(1, max_n)(rng);
        out.push_back(random_graph(rng, n, probs[i % 3]));
    }
    return out;
}

std::vector<Value> main_values(const Graph& g, std::uint64_t budget) {
    std::vector<Value> out;
    for (Param p : kMainParams) out.push_back(solve(p, g, budget).value);
    return out;
}

std::vector<Violation> audit_values(const Graph& g, const std::vector<Value>& values) {
    std::vector<Violation> out;
    auto val = [&](Param p) { return values.at(index_of(p)); };
    if (g.m() == 0 && g.n() > 0) {
        // Edgeless graphs: the starred cells are replaced by exact equalities.
        auto eq = [&](Param row, Param col, long long k) {
            Value r = val(row), c = val(col);
            if (!r.finite() || !c.finite() || r.get() != k * c.get())
                out.push_back({row, col, "edgeless", r, c, Rational(k) * (c.finite() ? c.get() : 0)});
        };
        eq(Param::Gamma, Param::GammaR, 1);
        for (Param p : {Param::GammaW2, Param::Gamma2, Param::RGammaW2, Param::RGamma2, Param::GammaR})
            eq(Param::GammaSet2, p, 2);
    }
    if (g.n() == 0) return out;
    for (const auto& bd : bound_table()) {
        if (bd.kind == BoundKind::NoBound || !holds(bd, g)) continue;
        Value r = val(bd.row), c = val(bd.col);
        if (!r.finite() || !c.finite()) continue;
        if (bd.kind == BoundKind::Equal) {
            if (r.get() != c.get()) out.push_back({bd.row, bd.col, "table", r, c, Rational(c.get())});
            continue;
        }
        Rational limit = bd.at(c.get());
        if (Rational(r.get()) > limit) out.push_back({bd.row, bd.col, "table", r, c, limit});
    }
    return out;
}

std::vector<Violation> audit_graph(const Graph& g, std::uint64_t budget) {
    return audit_values(g, main_values(g, budget));
}

const std::vector<SharpnessAssignment>& sharpness_assignments() {
    static const std::vector<SharpnessAssignment> all = make_assignments();
    return all;
}

const SharpnessAssignment& sharpness_for(Param row, Param col) {
    for (const auto& s : sharpness_assignments())
        if (s.row == row && s.col == col) return s;
    throw Error(ErrorCode::UnknownName, "no sharpness family for this cell");
}

SharpnessReport sharpness_check(const SharpnessAssignment& s, int size, std::uint64_t budget) {
    Graph g = generate(s.family, size);
    const Bound& bd = bound(s.row, s.col);
    SharpnessReport r{s.row, s.col, s.family, size, solve(s.row, g, budget).value,
                      solve(s.col, g, budget).value, Rational(0), false};
    if (r.row_value.finite() && r.col_value.finite()) {
        r.bound = bd.at(r.col_value.get());
        r.pass = Rational(r.row_value.get()) == r.bound;
    }
    return r;
}

UnboundedReport unbounded_check(Param row, Param col, const std::vector<int>& sizes, std::uint64_t budget) {
    const Bound& bd = bound(row, col);
    if (bd.kind != BoundKind::NoBound)
        throw Error(ErrorCode::UnknownName, "cell has a bound");
    UnboundedReport r{row, col, kSharp[index_of(row)][index_of(col)], sizes, {}, {}, true};
    for (int s : sizes) {
        Graph g = generate(r.family, s);
        r.row_values.push_back(solve(row, g, budget).value);
        r.col_values.push_back(solve(col, g, budget).value);
    }
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (!r.row_values[i].finite() || !r.col_values[i].finite()) r.pass = false;
        else if (i > 0 && (r.row_values[i].get() <= r.row_values[i - 1].get() ||
                           !(r.col_values[i] == r.col_values[0])))
            r.pass = false;
    }
    return r;
}

const std::vector<std::pair<Param, Param>>& covering_pairs() {
    using P = Param;
    static const std::vector<std::pair<Param, Param>> covers = {
        {P::Gamma, P::GammaT},          {P::Gamma, P::GammaW2},        {P::GammaT, P::GammaSet2},
        {P::GammaT, P::RGammaW2},       {P::GammaW2, P::GammaSet2},    {P::GammaW2, P::Gamma2},
        {P::GammaW2, P::RGammaW2},      {P::GammaSet2, P::GammaTSet2}, {P::GammaSet2, P::GammaX2},
        {P::GammaSet2, P::RGammaSet2},  {P::GammaTSet2, P::GammaTX2},  {P::GammaTSet2, P::RGammaTSet2},
        {P::Gamma2, P::GammaX2},        {P::Gamma2, P::RGamma2},       {P::GammaX2, P::GammaTX2},
        {P::GammaX2, P::RGammaX2},      {P::GammaTX2, P::RGammaTX2},   {P::RGammaW2, P::RGamma2},
        {P::RGammaW2, P::GammaR},       {P::RGamma2, P::RGammaX2},     {P::RGammaX2, P::RGammaTX2},
        {P::GammaR, P::RGammaSet2},     {P::RGammaSet2, P::RGammaX2},  {P::RGammaSet2, P::RGammaTSet2},
        {P::RGammaTSet2, P::RGammaTX2},
    };
    return covers;
}

std::vector<std::pair<Param, Param>> covers_from_table() {
    const int n = kMainCount;
    std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) le[r][c] = pointwise(bound(main_param(r), main_param(c)));
    std::vector<std::pair<Param, Param>> out;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (r == c || !le[r][c] || le[c][r]) continue;
            bool direct = true;
            for (int m = 0; m < n && direct; ++m)
                if (m != r && m != c && le[r][m] && le[m][c]) direct = false;
            if (direct) out.emplace_back(main_param(r), main_param(c));
        }
    return out;
}

Structure hasse_and_classes() {
    Structure s;
    s.covers = covering_pairs();
    const int n = kMainCount;
    // reach[r][c]: r is bounded by a function of c
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            reach[r][c] = bound(main_param(r), main_param(c)).kind != BoundKind::NoBound;
    for (int m = 0; m < n; ++m)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (reach[r][m] && reach[m][c]) reach[r][c] = 1;
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
        if (cls[v] >= 0) continue;
        groups.emplace_back();
        for (int u = 0; u < n; ++u)
            if (reach[v][u] && reach[u][v]) {
                cls[u] = static_cast<int>(groups.size()) - 1;
                groups.back().push_back(u);
            }
    }
    // Order classes from the bottom: a class lies below every class it is bounded by.
    auto below = [&](const std::vector<int>& a, const std::vector<int>& b) {
        return reach[a.front()][b.front()] && !reach[b.front()][a.front()];
    };
    std::vector<std::pair<int, std::vector<int>>> ranked;
    for (const auto& a : groups) {
        int rank = 0;
        for (const auto& g : groups) rank += below(g, a);
        ranked.emplace_back(rank, a);
    }
    std::sort(ranked.begin(), ranked.end());
    for (std::size_t i = 0; i < groups.size(); ++i) groups[i] = ranked[i].second;
    s.linear = true;
    for (std::size_t i = 0; i + 1 < groups.size(); ++i)
        if (!below(groups[i], groups[i + 1])) s.linear = false;
    for (const auto& g : groups) {
        s.classes.emplace_back();
        for (int v : g) s.classes.back().push_back(main_param(v));
    }
    return s;
}

}  // namespace dominion
