#include "dominion/transforms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>

#include "dominion/errors.hpp"
#include "dominion/exact.hpp"

namespace dominion {

namespace {

using Values = std::vector<std::uint8_t>;

int smallest_neighbor(const Graph& g, Vertex v) {
    const auto& nb = g.neighbors(v);
    if (nb.empty())
        throw Error(ErrorCode::SideConditionViolated, "vertex " + std::to_string(v) + " is isolated");
    return nb.front();
}

Values scaled(const Values& f, int k) {
    Values out(f);
    for (auto& x : out) x = static_cast<std::uint8_t>(x * k);
    return out;
}

Values positives_to(const Values& f, std::uint8_t to) {
    Values out(f.size(), 0);
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v]) out[v] = to;
    return out;
}

Values label_sizes(const Values& f) {
    Values out(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) out[v] = static_cast<std::uint8_t>(std::popcount(f[v]));
    return out;
}

// (2,3): total dominating set from a weak 2-dominating function.
Values total_from_weak2(const Graph& g, const Values& f) {
    const int n = g.n();
    std::vector<char> covered(n, 0), in_s(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (f[v] != 0) continue;
        std::vector<Vertex> ones;
        for (Vertex u : g.neighbors(v))
            if (f[u] == 1) ones.push_back(u);
        if (ones.size() < 2) continue;
        if (std::any_of(ones.begin(), ones.end(), [&](Vertex u) { return covered[u]; })) continue;
        in_s[v] = 1;
        for (Vertex u : ones) covered[u] = 1;
    }
    Values d(n, 0);
    bool loose = false, heavy = false;
    for (Vertex v = 0; v < n; ++v) {
        if (in_s[v]) d[v] = 1;
        if (f[v] == 1 && covered[v]) d[v] = 1;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (f[v] == 2) {
            heavy = true;
            d[v] = 1;
            d[smallest_neighbor(g, v)] = 1;
        } else if (f[v] == 1 && !covered[v]) {
            loose = true;
            d[smallest_neighbor(g, v)] = 1;
        }
    }
    if (!loose && !heavy) {
        for (Vertex v = 0; v < n; ++v)
            if (f[v] == 1) {
                d[v] = 0;
                break;
            }
    }
    return d;
}

// (4,3): {2}-dominating function from a weak 2-dominating function.
Values set2_from_weak2(const Graph& g, Values f) {
    const int n = g.n();
    auto has_two = [&] { return std::find(f.begin(), f.end(), 2) != f.end(); };
    if (!has_two()) {
        for (Vertex u = 0; u < n; ++u) {
            if (f[u] != 1 || g.degree(u) == 0) continue;
            const auto& nb = g.neighbors(u);
            if (std::none_of(nb.begin(), nb.end(), [&](Vertex x) { return f[x] == 0; })) {
                f[u] = 0;
                f[nb.front()] = 2;
                break;
            }
        }
    }
    if (has_two()) return positives_to(f, 2);

    // Auxiliary graph on the non-isolated weight-one vertices: adjacent when they
    // share a weight-zero neighbor, witnessed by the smallest such neighbor.
    std::vector<std::vector<std::pair<Vertex, Vertex>>> h(n);
    for (Vertex x = 0; x < n; ++x) {
        if (f[x] != 0) continue;
        const auto& nb = g.neighbors(x);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (f[nb[i]] == 1 && f[nb[j]] == 1) {
                    h[nb[i]].emplace_back(nb[j], x);
                    h[nb[j]].emplace_back(nb[i], x);
                }
    }
    for (auto& adj : h) std::sort(adj.begin(), adj.end());
    auto selector = [&](Vertex u, Vertex v) {
        for (auto [w, x] : h[u])
            if (w == v) return x;
        return -1;
    };
    std::vector<int> mate(n, -1);
    Values out(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        if (f[u] == 1 && g.degree(u) == 0) out[u] = 2;
        if (f[u] == 1 && g.degree(u) > 0) out[u] = 1;
    }
    for (Vertex u = 0; u < n; ++u) {
        if (f[u] != 1 || mate[u] >= 0) continue;
        for (auto [v, x] : h[u])
            if (mate[v] < 0) {
                mate[u] = v;
                mate[v] = u;
                out[x] = 1;
                break;
            }
    }
    for (Vertex u = 0; u < n; ++u) {
        if (f[u] != 1 || g.degree(u) == 0 || mate[u] >= 0) continue;
        if (h[u].empty()) throw Error(ErrorCode::InfeasibleSource, "weight-one vertex without a partner");
        Vertex v = h[u].front().first;
        out[selector(u, v)] = 1;
    }
    return out;
}

// (5,3): total {2}-dominating function from a weak 2-dominating function.
Values tset2_from_weak2(const Graph& g, Values f) {
    const int n = g.n();
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v = 0; v < n; ++v) {
            if (f[v] != 2) continue;
            const auto& nb = g.neighbors(v);
            if (std::none_of(nb.begin(), nb.end(), [&](Vertex x) { return f[x] == 0; })) {
                f[v] = 1;
                changed = true;
            }
        }
    }
    Values out(n, 0);
    std::vector<char> z(n, 0), settled(n, 0), near_two(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (f[v] != 2) continue;
        out[v] = 2;
        settled[v] = 1;
        for (Vertex u : g.neighbors(v)) {
            settled[u] = 1;
            near_two[u] = 1;
        }
        for (Vertex u : g.neighbors(v))
            if (f[u] == 0) {
                out[u] = 2;
                break;
            }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (f[v] != 1) continue;
        for (Vertex u : g.neighbors(v))
            if (f[u] == 1) z[v] = 1;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!z[v]) continue;
        out[v] = 2;
        settled[v] = 1;
        for (Vertex u : g.neighbors(v)) settled[u] = 1;
    }
    std::vector<char> pending(n, 0);  // weight-one vertices still to be handled
    for (Vertex v = 0; v < n; ++v) {
        if (f[v] != 1 || z[v]) continue;
        if (near_two[v]) out[v] = 1;
        const auto& nb = g.neighbors(v);
        bool enclosed = !settled[v] &&
                        std::all_of(nb.begin(), nb.end(), [&](Vertex u) { return settled[u]; });
        if (enclosed) {
            out[v] = 0;
            Vertex y = smallest_neighbor(g, v);
            out[y] = std::max<std::uint8_t>(out[y], 2);
        } else {
            pending[v] = 1;
        }
    }
    // Each unsettled weight-zero vertex joins its two smallest pending neighbors.
    std::vector<Edge> links;
    std::vector<Vertex> via;
    for (Vertex x = 0; x < n; ++x) {
        if (f[x] != 0 || settled[x]) continue;
        std::vector<Vertex> ends;
        for (Vertex u : g.neighbors(x))
            if (pending[u] && ends.size() < 2) ends.push_back(u);
        if (ends.size() < 2) throw Error(ErrorCode::InfeasibleSource, "weak 2-domination fails");
        links.emplace_back(ends[0], ends[1]);
        via.push_back(x);
    }
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int v) { return parent[v] == v ? v : parent[v] = root(parent[v]); };
    std::vector<char> linked(n, 0);
    for (auto [u, v] : links) {
        parent[root(u)] = root(v);
        linked[u] = linked[v] = 1;
    }
    std::vector<char> done(n, 0);
    for (Vertex r = 0; r < n; ++r) {
        if (!linked[r] || done[root(r)]) continue;
        int rep = root(r);
        done[rep] = 1;
        std::vector<Vertex> members;
        std::vector<int> local(n, -1);
        for (Vertex v = 0; v < n; ++v)
            if (linked[v] && root(v) == rep) {
                local[v] = static_cast<int>(members.size());
                members.push_back(v);
            }
        std::vector<Edge> es;
        std::vector<Vertex> owners;
        for (std::size_t i = 0; i < links.size(); ++i)
            if (local[links[i].first] >= 0) {
                es.emplace_back(local[links[i].first], local[links[i].second]);
                owners.push_back(via[i]);
            }
        // MultiGraph sorts its edges; keep the owners aligned with that order.
        std::vector<std::size_t> order(es.size());
        std::iota(order.begin(), order.end(), 0);
        auto norm = [&](std::size_t i) { return std::minmax(es[i].first, es[i].second); };
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return norm(x) < norm(y); });
        MultiGraph k(static_cast<int>(members.size()), es);
        Solution vc = solve_cover(Param::Tau2, k);
        Solution ec = solve_cover(Param::Rho2, k);
        for (std::size_t i = 0; i < members.size(); ++i) out[members[i]] = vc.witness->values[i];
        for (std::size_t i = 0; i < order.size(); ++i) out[owners[order[i]]] = ec.witness->values[i];
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!pending[v] || linked[v] || near_two[v]) continue;
        out[v] = 0;
        Vertex y = smallest_neighbor(g, v);
        out[y] = std::max<std::uint8_t>(out[y], 2);
    }
    return out;
}

// (9,3)
Values rainbow_weak2_from_weak2(const Values& f) {
    const int n = static_cast<int>(f.size());
    if (std::find(f.begin(), f.end(), 2) != f.end()) return positives_to(f, kAB);
    if (std::find(f.begin(), f.end(), 0) == f.end()) return Values(n, kA);
    Values out = positives_to(f, kAB);
    int given = 0;
    for (Vertex v = 0; v < n && given < 2; ++v)
        if (f[v] == 1) out[v] = given++ == 0 ? kA : kB;
    return out;
}

// (13,3)
Values roman_from_weak2(const Values& f) {
    if (std::find(f.begin(), f.end(), 2) != f.end()) return positives_to(f, 2);
    Values out = positives_to(f, 2);
    auto it = std::find(f.begin(), f.end(), 1);
    if (it != f.end()) out[it - f.begin()] = 1;
    return out;
}

// (1,4) and (2,5): drop the smallest weight-one vertex from the support.
Values drop_one(const Values& f) {
    Values out = positives_to(f, 1);
    auto it = std::find(f.begin(), f.end(), 1);
    if (it != f.end()) out[it - f.begin()] = 0;
    return out;
}

// (7,6)
Values double_from_two(const Graph& g, const Values& f) {
    const int n = g.n();
    Values d(f);
    Vertex x = -1;
    for (Vertex v = 0; v < n && x < 0; ++v)
        if (!f[v]) x = v;
    if (x < 0) return d;
    std::vector<Vertex> pair;
    for (Vertex u : g.neighbors(x))
        if (f[u] && pair.size() < 2) pair.push_back(u);
    d[x] = 1;
    for (Vertex z = 0; z < n; ++z) {
        if (!f[z] || std::find(pair.begin(), pair.end(), z) != pair.end()) continue;
        d[smallest_neighbor(g, z)] = 1;
    }
    return d;
}

// Shortest cycle of a bipartite graph, ties broken by the smallest start vertex.
std::vector<Vertex> shortest_cycle(const std::vector<std::vector<Vertex>>& adj) {
    const int n = static_cast<int>(adj.size());
    int best = -1;
    std::vector<Vertex> cycle;
    for (Vertex s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), par(n, -1);
        std::deque<Vertex> q{s};
        dist[s] = 0;
        int len = -1;
        Vertex cu = -1, cv = -1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            for (Vertex v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    par[v] = u;
                    q.push_back(v);
                } else if (v != par[u] && (len < 0 || dist[u] + dist[v] + 1 < len)) {
                    len = dist[u] + dist[v] + 1;
                    cu = u;
                    cv = v;
                }
            }
        }
        if (len < 0 || (best >= 0 && len >= best)) continue;
        std::vector<Vertex> left, right;
        for (Vertex w = cu; w >= 0; w = par[w]) left.push_back(w);
        for (Vertex w = cv; w >= 0; w = par[w]) right.push_back(w);
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        std::vector<Vertex> shared;
        std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                              std::back_inserter(shared));
        if (shared.size() != 1) continue;  // closed walk, a shorter cycle is found elsewhere
        best = len;
        cycle.clear();
        std::set_union(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(cycle));
    }
    return cycle;
}

// (8,6)
Values total_double_from_two(const Graph& g, const Values& f) {
    const int n = g.n();
    Values d(f);
    std::vector<int> inner(n, 0);
    bool independent = true;
    for (Vertex v = 0; v < n; ++v) {
        if (!f[v]) continue;
        for (Vertex u : g.neighbors(v)) inner[v] += f[u] ? 1 : 0;
        if (inner[v]) independent = false;
    }
    auto add_outside = [&](Vertex v, int count) {
        for (Vertex u : g.neighbors(v)) {
            if (count == 0) break;
            if (!f[u]) {
                d[u] = 1;
                --count;
            }
        }
    };
    if (!independent) {
        for (Vertex v = 0; v < n; ++v) {
            if (!f[v]) continue;
            if (inner[v] == 1) add_outside(v, 1);
            if (inner[v] == 0) add_outside(v, 2);
        }
        return d;
    }
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v))
            if (f[u] || f[v]) adj[v].push_back(u);
    std::vector<Vertex> cycle = shortest_cycle(adj);
    if (cycle.empty()) throw Error(ErrorCode::SideConditionViolated, "no cycle through the 2-dominating set");
    std::vector<char> on(n, 0);
    for (Vertex v : cycle) {
        on[v] = 1;
        d[v] = 1;
    }
    for (Vertex v = 0; v < n; ++v)
        if (f[v] && !on[v]) add_outside(v, 2);
    return d;
}

// (8,7)
Values total_double_from_double(const Graph& g, const Values& f) {
    const int n = g.n();
    Values d(f);
    std::vector<int> inner(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (f[v])
            for (Vertex u : g.neighbors(v)) inner[v] += f[u] ? 1 : 0;
    Vertex v = -1;
    for (Vertex x = 0; x < n && v < 0; ++x)
        if (f[x] && inner[x] == 1) v = x;
    if (v < 0) return d;
    auto outside = [&](Vertex x) {
        for (Vertex u : g.neighbors(x))
            if (!f[u]) return u;
        throw Error(ErrorCode::SideConditionViolated, "minimum degree below two");
    };
    Vertex w = outside(v);
    Vertex v2 = -1;
    for (Vertex u : g.neighbors(w))
        if (f[u] && u != v) {
            v2 = u;
            break;
        }
    d[w] = 1;
    for (Vertex x = 0; x < n; ++x)
        if (f[x] && inner[x] == 1 && x != v && x != v2) d[outside(x)] = 1;
    return d;
}

// (11,10); returns the number of recoloring steps.
int rainbow_double_from_rainbow2(const Graph& g, Values& l) {
    const int n = g.n();
    int steps = 0;
    for (std::uint8_t x : {kA, kB}) {
        const std::uint8_t y = x == kA ? kB : kA;
        for (;;) {
            Vertex v = -1;
            for (Vertex u = 0; u < n && v < 0; ++u) {
                if (l[u] != x) continue;
                const auto& nb = g.neighbors(u);
                if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return l[w] == y; })) v = u;
            }
            if (v < 0) break;
            Vertex w = -1;
            for (Vertex u : g.neighbors(v))
                if (l[u] == kEmpty) {
                    w = u;
                    break;
                }
            if (w >= 0)
                l[w] = y;
            else
                l[v] = y;
            ++steps;
        }
    }
    return steps;
}

// (1,11) and (2,12): the smaller colour class.
Values smaller_class(const Values& l) {
    long long a = std::count(l.begin(), l.end(), kA), b = std::count(l.begin(), l.end(), kB);
    std::uint8_t keep = a <= b ? kA : kB;
    Values out(l.size(), 0);
    for (std::size_t v = 0; v < l.size(); ++v) out[v] = l[v] == keep ? 1 : 0;
    return out;
}

// (1,13)
Values dominating_from_roman(const Graph& g, Values f) {
    if (std::find(f.begin(), f.end(), 2) == f.end()) {
        auto es = g.edges();
        if (es.empty()) throw Error(ErrorCode::SideConditionViolated, "graph has no edge");
        f[es.front().first] = 2;
        f[es.front().second] = 0;
    }
    return positives_to(f, 1);
}

// Roman function from a rainbow labeling: full labels and the smaller singleton class get 2.
Values roman_from_rainbow(const Values& l) {
    long long a = std::count(l.begin(), l.end(), kA), b = std::count(l.begin(), l.end(), kB);
    std::uint8_t keep = a <= b ? kA : kB;
    Values out(l.size(), 0);
    for (std::size_t v = 0; v < l.size(); ++v)
        if (l[v] == kAB || l[v] == keep) out[v] = 2;
    return out;
}

// Total dominating set from a {2}-dominating function: the support, plus a neighbor for each
// weight-two vertex whose neighbors all carry weight zero.
Values total_from_set2(const Graph& g, const Values& f) {
    Values d = positives_to(f, 1);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (f[v] != 2) continue;
        const auto& nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return f[u] != 0; }))
            d[smallest_neighbor(g, v)] = 1;
    }
    return d;
}

Values rainbow_from_roman(const Values& f) {
    Values out(f.size(), kEmpty);
    for (std::size_t v = 0; v < f.size(); ++v) out[v] = f[v] == 2 ? kAB : f[v] == 1 ? kA : kEmpty;
    return out;
}

// Total dominating set from a rainbow weak 2-dominating function, of size at most its weight.
// Support vertices with a supported neighbor stay; isolated full labels borrow a neighbor; the
// isolated singleton labels and the empty vertices seeing only them are resolved through a
// maximum matching of the bipartite graph whose edges are those empty vertices.
Values total_from_rainbow_weak2(const Graph& g, const Values& l) {
    const int n = g.n();
    std::vector<char> lone(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (!l[v]) continue;
        const auto& nb = g.neighbors(v);
        lone[v] = std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return l[u] != kEmpty; });
    }
    auto single = [&](Vertex v) { return lone[v] && l[v] != kAB; };
    Values d(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (l[v] && !single(v)) d[v] = 1;
        if (l[v] == kAB && lone[v]) d[smallest_neighbor(g, v)] = 1;
    }
    struct Link {
        Vertex a, b, via;
    };
    std::vector<Link> links;
    for (Vertex y = 0; y < n; ++y) {
        if (l[y]) continue;
        Vertex a = -1, b = -1;
        bool reached = false;
        for (Vertex u : g.neighbors(y)) {
            if (l[u] && !single(u)) reached = true;
            if (single(u) && l[u] == kA && a < 0) a = u;
            if (single(u) && l[u] == kB && b < 0) b = u;
        }
        if (reached) continue;
        if (a < 0 || b < 0) throw Error(ErrorCode::InfeasibleSource, "rainbow weak 2-domination fails");
        links.push_back({a, b, y});
    }
    std::vector<std::vector<int>> at(n);
    for (int i = 0; i < static_cast<int>(links.size()); ++i) {
        at[links[i].a].push_back(i);
        at[links[i].b].push_back(i);
    }
    std::vector<int> mate(n, -1);  // matched link index per endpoint
    std::vector<char> seen;
    std::function<bool(Vertex)> augment = [&](Vertex a) {
        for (int i : at[a]) {
            Vertex b = links[i].b;
            if (seen[b]) continue;
            seen[b] = 1;
            if (mate[b] < 0 || augment(links[mate[b]].a)) {
                mate[a] = mate[b] = i;
                return true;
            }
        }
        return false;
    };
    for (Vertex a = 0; a < n; ++a) {
        if (l[a] != kA || at[a].empty()) continue;
        seen.assign(n, 0);
        augment(a);
    }
    // Minimum vertex cover from the matching: alternating search from free a-side vertices.
    std::vector<char> reach(n, 0);
    std::deque<Vertex> q;
    for (Vertex a = 0; a < n; ++a)
        if (l[a] == kA && !at[a].empty() && mate[a] < 0) {
            reach[a] = 1;
            q.push_back(a);
        }
    while (!q.empty()) {
        Vertex a = q.front();
        q.pop_front();
        for (int i : at[a]) {
            Vertex b = links[i].b;
            if (reach[b] || mate[a] == i) continue;
            reach[b] = 1;
            if (mate[b] >= 0 && !reach[links[mate[b]].a]) {
                reach[links[mate[b]].a] = 1;
                q.push_back(links[mate[b]].a);
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!single(v)) continue;
        if (at[v].empty()) {
            d[smallest_neighbor(g, v)] = 1;
            continue;
        }
        bool in_cover = l[v] == kA ? !reach[v] : reach[v];
        if (in_cover) d[v] = 1;
        int edge = mate[v] >= 0 ? mate[v] : at[v].front();
        d[links[edge].via] = 1;
    }
    return d;
}

struct Entry {
    int row, col;
    SideCondition side;
};

constexpr Entry kDirect[] = {
    {4, 1, SideCondition::None},          {5, 2, SideCondition::NoIsolated},
    {2, 3, SideCondition::NoIsolated},    {4, 3, SideCondition::AtLeastOneEdge},
    {5, 3, SideCondition::NoIsolated},    {9, 3, SideCondition::NotK1},
    {13, 3, SideCondition::None},         {1, 4, SideCondition::None},
    {2, 5, SideCondition::NoIsolated},    {7, 6, SideCondition::NoIsolated},
    {8, 6, SideCondition::MinDegree2},    {8, 7, SideCondition::MinDegree2},
    {11, 10, SideCondition::NoIsolated},  {1, 11, SideCondition::NoIsolated},
    {2, 12, SideCondition::TotalDomatic2}, {1, 13, SideCondition::AtLeastOneEdge},
    {13, 1, SideCondition::None},
};

using P = Param;
constexpr std::pair<Param, Param> kCovers[] = {
    {P::Gamma, P::GammaT},          {P::Gamma, P::GammaW2},        {P::GammaT, P::GammaSet2},
    {P::GammaT, P::RGammaW2},       {P::GammaW2, P::GammaSet2},    {P::GammaW2, P::Gamma2},
    {P::GammaW2, P::RGammaW2},      {P::GammaSet2, P::GammaTSet2}, {P::GammaSet2, P::GammaX2},
    {P::GammaSet2, P::RGammaSet2},  {P::GammaTSet2, P::GammaTX2},  {P::GammaTSet2, P::RGammaTSet2},
    {P::Gamma2, P::GammaX2},        {P::Gamma2, P::RGamma2},       {P::GammaX2, P::GammaTX2},
    {P::GammaX2, P::RGammaX2},      {P::GammaTX2, P::RGammaTX2},   {P::RGammaW2, P::RGamma2},
    {P::RGammaW2, P::GammaR},       {P::RGamma2, P::RGammaX2},     {P::RGammaX2, P::RGammaTX2},
    {P::GammaR, P::RGammaSet2},     {P::RGammaSet2, P::RGammaX2},  {P::RGammaSet2, P::RGammaTSet2},
    {P::RGammaTSet2, P::RGammaTX2},
    // cover among the thirteen main parameters once the rainbow {2} variant is dropped
    {P::GammaR, P::RGammaX2},
};

int needed_degree(Param p) {
    switch (p) {
        case P::GammaT:
        case P::GammaTSet2:
        case P::GammaX2:
        case P::RGammaX2:
        case P::RGammaTSet2:
            return 1;
        case P::GammaTX2:
        case P::RGammaTX2:
            return 2;
        default:
            return 0;
    }
}

std::vector<Transform> make_transforms() {
    std::vector<Transform> out;
    for (const auto& e : kDirect) {
        Transform t;
        t.id = std::to_string(e.row) + "," + std::to_string(e.col);
        t.target = main_param(e.row - 1);
        t.source = main_param(e.col - 1);
        t.projection = false;
        const Bound& bd = bound(t.target, t.source);
        t.a = bd.a;
        t.b = bd.b;
        t.side = e.side;
        out.push_back(t);
    }
    for (auto [target, source] : kCovers) {
        Transform t;
        t.id = std::string(info(target).name) + "<" + info(source).name;
        t.target = target;
        t.source = source;
        t.projection = true;
        t.side = needed_degree(target) > needed_degree(source) ? SideCondition::NoIsolated
                                                                : SideCondition::None;
        out.push_back(t);
    }
    return out;
}

Values project(Param target, Param source, const Graph& g, const Values& f) {
    const WitnessKind tk = kind_for(target), sk = kind_for(source);
    if (target == P::GammaT && source == P::RGammaW2) return total_from_rainbow_weak2(g, f);
    if (target == P::GammaT && source == P::GammaSet2) return total_from_set2(g, f);
    if (target == P::GammaR) return roman_from_rainbow(f);
    if (target == P::RGammaW2 && source == P::GammaR) return rainbow_from_roman(f);
    if (tk == sk) {
        if (info(target).codomain == Codomain::Binary && info(source).codomain != Codomain::Binary)
            return positives_to(f, 1);
        return f;
    }
    if (sk == WitnessKind::Rainbow && tk == WitnessKind::Int) {
        if (info(target).codomain == Codomain::Binary) return positives_to(f, 1);
        return label_sizes(f);
    }
    throw Error(ErrorCode::UnknownName, "no projection between these witness kinds");
}

}  // namespace

const char* side_condition_name(SideCondition s) {
    switch (s) {
        case SideCondition::None: return "none";
        case SideCondition::NoIsolated: return "no_isolated_vertices";
        case SideCondition::AtLeastOneEdge: return "at_least_one_edge";
        case SideCondition::NotK1: return "not_k1";
        case SideCondition::MinDegree2: return "min_degree_2";
        case SideCondition::TotalDomatic2: return "total_domatic_2";
    }
    return "?";
}

bool side_condition_holds(SideCondition s, const Graph& g) {
    switch (s) {
        case SideCondition::None: return true;
        case SideCondition::NoIsolated: return g.n() == 0 || g.min_degree() >= 1;
        case SideCondition::AtLeastOneEdge: return g.m() >= 1;
        case SideCondition::NotK1: return g.n() != 1;
        case SideCondition::MinDegree2: return g.n() == 0 || g.min_degree() >= 2;
        case SideCondition::TotalDomatic2: return defined_on(Param::RGammaTX2, g);
    }
    return false;
}

const std::vector<Transform>& transforms() {
    static const std::vector<Transform> all = make_transforms();
    return all;
}

const Transform* find_transform(Param target, Param source) {
    for (const auto& t : transforms())
        if (t.target == target && t.source == source) return &t;
    return nullptr;
}

const Transform& find_transform(std::string_view id) {
    auto resolve = [](std::string_view s) -> std::optional<Param> {
        if (s.empty()) return std::nullopt;
        if (std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            int k = std::stoi(std::string(s));
            if (k >= 1 && k <= kMainCount) return main_param(k - 1);
            return std::nullopt;
        }
        return param_from_name(s);
    };
    auto sep = id.find_first_of(",<");
    if (sep != std::string_view::npos) {
        auto target = resolve(id.substr(0, sep));
        auto source = resolve(id.substr(sep + 1));
        if (target && source)
            if (const Transform* t = find_transform(*target, *source)) return *t;
    }
    throw Error(ErrorCode::UnknownName, "unknown transform '" + std::string(id) + "'");
}

TransformResult run(const Transform& t, const Graph& g, const Witness& src) {
    check_shape(t.source, g.n(), src);
    if (!is_feasible(t.source, g, src))
        throw Error(ErrorCode::InfeasibleSource,
                    std::string("witness is not feasible for ") + info(t.source).name);
    if (!side_condition_holds(t.side, g))
        throw Error(ErrorCode::SideConditionViolated,
                    "transform " + t.id + " requires " + side_condition_name(t.side));
    if (!t.projection && g.n() == 0)
        throw Error(ErrorCode::SideConditionViolated, "transform " + t.id + " requires a vertex");
    const Values& f = src.values;
    TransformResult res;
    res.witness.kind = kind_for(t.target);
    Values& out = res.witness.values;
    if (t.projection) {
        out = project(t.target, t.source, g, f);
        return res;
    }
    const std::string& id = t.id;
    if (id == "4,1" || id == "5,2" || id == "13,1") out = scaled(f, 2);
    else if (id == "2,3") out = total_from_weak2(g, f);
    else if (id == "4,3") out = set2_from_weak2(g, f);
    else if (id == "5,3") out = tset2_from_weak2(g, f);
    else if (id == "9,3") out = rainbow_weak2_from_weak2(f);
    else if (id == "13,3") out = roman_from_weak2(f);
    else if (id == "1,4" || id == "2,5") out = drop_one(f);
    else if (id == "7,6") out = double_from_two(g, f);
    else if (id == "8,6") out = total_double_from_two(g, f);
    else if (id == "8,7") out = total_double_from_double(g, f);
    else if (id == "11,10") {
        out = f;
        res.steps = rainbow_double_from_rainbow2(g, out);
    } else if (id == "1,11" || id == "2,12") out = smaller_class(f);
    else if (id == "1,13") out = dominating_from_roman(g, f);
    else throw Error(ErrorCode::UnknownName, "no construction for transform " + id);
    return res;
}

GuaranteeReport verify_guarantee(const Transform& t, const Graph& g, const Witness& src) {
    GuaranteeReport r;
    r.id = t.id;
    r.target = apply(t, g, src);
    r.source_weight = witness_weight(src);
    r.target_weight = witness_weight(r.target);
    r.bound = t.a * r.source_weight + t.b;
    r.feasible = is_feasible(t.target, g, r.target);
    r.pass = r.feasible && Rational(r.target_weight) <= r.bound;
    return r;
}

}  // namespace dominion
