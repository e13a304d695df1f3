#include "dominion/families.hpp"

#include "dominion/errors.hpp"
#include "dominion/witness.hpp"

namespace dominion {

namespace {

struct FamilyInfo {
    Family id;
    const char* name;
    int min_size;
    bool copies;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::KK2, "kK2", 1, true},
    {Family::KC4, "kC4", 1, true},
    {Family::KnStarStar, "Kn**", 3, false},
    {Family::KH, "kH", 1, true},
    {Family::KK44, "kK44", 1, true},
    {Family::Fan3, "Fn3", 2, false},
    {Family::Fan4, "Fn4", 3, false},
    {Family::Star, "K1n", 2, false},
    {Family::SubK3Multi, "S(K3^n)", 3, false},
    {Family::Qn, "Qn", 3, false},
    {Family::Tn, "Tn", 2, false},
    {Family::SubKOdd, "S(K2n+1)", 2, false},
    {Family::SubKnDouble, "S(Kn^2)", 3, false},
    {Family::SubStarMinus, "S(K1n)-", 3, false},
};

const FamilyInfo& finfo(Family f) { return kFamilies[static_cast<int>(f)]; }

Graph double_star() { return build(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

Graph kn_star_star(int n) {
    std::vector<Edge> es;
    int next = n;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            es.emplace_back(x, y);
            for (int t = 0; t < 2; ++t, ++next) {
                es.emplace_back(x, next);
                es.emplace_back(y, next);
            }
        }
    return build(next, es);
}

Graph fan(int n, int cycle_len) {
    std::vector<Edge> es;
    int per = cycle_len - 1;
    for (int i = 0; i < n; ++i) {
        int prev = 0;
        for (int j = 1; j <= per; ++j) {
            int v = 1 + per * i + (j - 1);
            es.emplace_back(prev, v);
            prev = v;
        }
        es.emplace_back(prev, 0);
    }
    return build(1 + per * n, es);
}

Graph q_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        es.emplace_back(0, 2 + 2 * i);
        es.emplace_back(2 + 2 * i, 3 + 2 * i);
        es.emplace_back(3 + 2 * i, 1);
    }
    return build(2 + 2 * n, es);
}

Graph t_graph(int n) {
    auto v = [](int i) { return i; };
    auto w = [n](int i) { return n + i; };
    auto s = [n](int i) { return 2 * n + i; };
    auto t = [n](int i) { return 2 * n + 3 + i; };
    std::vector<Edge> es{{s(0), s(1)}, {s(1), s(2)}, {s(0), s(2)}};
    for (int i = 0; i < 5; ++i) es.emplace_back(t(i), t((i + 1) % 5));
    for (int i = 0; i < n; ++i) {
        es.emplace_back(s(0), v(i));
        es.emplace_back(s(2), v(i));
        es.emplace_back(t(0), w(i));
        es.emplace_back(t(4), w(i));
        es.emplace_back(v(i), w(i));
    }
    return build(2 * n + 8, es);
}

Graph sub_star_minus(int n) {
    Graph s = subdivide(as_multigraph(star(n)));
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < s.n(); ++v)
        if (v != n) keep.push_back(v);
    return induced(s, keep);
}

using Closed = std::optional<long long>;

// Table values indexed by main parameter; nullopt marks a blank cell.
std::array<Closed, kMainCount> table_row(Family f, long long s) {
    const long long k = s, n = s;
    std::array<Closed, kMainCount> r;
    r.fill(std::nullopt);
    switch (f) {
        case Family::KK2:
            r = {k, 2 * k, 2 * k, 2 * k, 4 * k, 2 * k, 2 * k, std::nullopt,
                 2 * k, 2 * k, 2 * k, std::nullopt, 2 * k};
            break;
        case Family::KC4:
            r = {2 * k, 2 * k, 2 * k, std::nullopt, 4 * k, 2 * k, std::nullopt, 4 * k,
                 2 * k, 2 * k, 4 * k, 4 * k, 3 * k};
            break;
        case Family::KnStarStar:
            r = {n - 1, n - 1, n, n, n, n, n, n, 2 * n - 2, std::nullopt, std::nullopt, std::nullopt,
                 2 * n - 2};
            break;
        case Family::KH:
            r[1] = 2 * k;
            r[2] = r[3] = r[4] = r[8] = r[12] = 4 * k;
            break;
        case Family::KK44:
            for (int i = 2; i < kMainCount; ++i) r[i] = 4 * k;
            break;
        case Family::Fan3:
            r[6] = n + 1;
            r[7] = 2 * n + 1;
            r[10] = n + 1;
            break;
        case Family::Fan4:
            r[2] = n + 1;
            r[3] = 2 * n + 1;
            r[5] = n + 1;
            r[6] = 2 * n + 1;
            r[7] = 3 * n + 1;
            r[8] = n + 1;
            r[9] = n + 1;
            break;
        case Family::Star:
            r = {1, 2, 2, 2, 4, n, n + 1, std::nullopt, 2, n, n + 1, std::nullopt, 2};
            break;
        case Family::SubK3Multi:
            r[5] = 3;
            r[6] = 5;
            r[7] = 6;
            r[9] = n + 3;
            r[10] = n + 4;
            break;
        case Family::Qn:
            r[0] = 2;
            r[1] = r[2] = r[3] = 4;
            r[4] = 8;
            r[7] = 2 * n + 2;
            r[8] = r[12] = 4;
            break;
        case Family::Tn:
            r = {3, 5, 5, 6, 8, 5, 6, 8, 6, 6, 6, n + 9, 6};
            break;
        case Family::SubKOdd:
            r[1] = 3 * n + 1;
            r[2] = r[5] = 2 * n + 1;
            break;
        case Family::SubKnDouble:
            r[12] = 2 * n - 1;
            r[2] = r[5] = n;
            break;
        case Family::SubStarMinus:
            r[12] = n + 1;
            r[0] = n;
            r[3] = 2 * n;
            break;
    }
    return r;
}

}  // namespace

const char* family_name(Family f) { return finfo(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
    for (const auto& fi : kFamilies)
        if (name == fi.name) return fi.id;
    return std::nullopt;
}

int min_size(Family f) { return finfo(f).min_size; }
bool sized_by_copies(Family f) { return finfo(f).copies; }

Graph generate(Family f, int size) {
    if (size < min_size(f))
        throw Error(ErrorCode::SizeBelowThreshold, std::string(family_name(f)) + " needs size >= " +
                                                       std::to_string(min_size(f)));
    switch (f) {
        case Family::KK2: return disjoint_union(complete(2), size);
        case Family::KC4: return disjoint_union(cycle(4), size);
        case Family::KnStarStar: return kn_star_star(size);
        case Family::KH: return disjoint_union(double_star(), size);
        case Family::KK44: return disjoint_union(complete_bipartite(4, 4), size);
        case Family::Fan3: return fan(size, 3);
        case Family::Fan4: return fan(size, 4);
        case Family::Star: return star(size);
        case Family::SubK3Multi: return subdivide(with_multiplicity(complete(3), size));
        case Family::Qn: return q_graph(size);
        case Family::Tn: return t_graph(size);
        case Family::SubKOdd: return subdivide(as_multigraph(complete(2 * size + 1)));
        case Family::SubKnDouble: return subdivide(with_multiplicity(complete(size), 2));
        case Family::SubStarMinus: return sub_star_minus(size);
    }
    throw Error(ErrorCode::UnknownName, "unknown family");
}

std::optional<Value> expected_value(Family f, int size, Param p) {
    if (!is_main(p) || size < min_size(f)) return std::nullopt;
    auto r = table_row(f, size);
    if (auto v = r[index_of(p)]) return Value::finite_value(*v);
    // Blank cells: report Infinite only when the minimum degree alone rules p out.
    int need = 0;
    switch (p) {
        case Param::GammaT:
        case Param::GammaTSet2:
        case Param::GammaX2:
        case Param::RGammaX2:
            need = 1;
            break;
        case Param::GammaTX2:
        case Param::RGammaTX2:
            need = 2;
            break;
        default:
            return std::nullopt;
    }
    if (generate(f, size).min_degree() < need) return Value::infinite();
    return std::nullopt;
}

}  // namespace dominion
