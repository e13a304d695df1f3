#include "dominion/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "dominion/errors.hpp"

namespace dominion {

namespace {

void check_vertex(int n, Vertex v) {
    if (v < 0 || v >= n)
        throw Error(ErrorCode::IndexOutOfRange,
                    "vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
}

}  // namespace

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(n(), v);
    return adj_[v];
}

std::vector<Vertex> Graph::closed_neighborhood(Vertex v) const {
    std::vector<Vertex> out = neighbors(v);
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nu = neighbors(u);
    check_vertex(n(), v);
    return std::binary_search(nu.begin(), nu.end(), v);
}

int Graph::min_degree() const {
    int d = n() ? n() : 0;
    for (const auto& a : adj_) d = std::min<int>(d, a.size());
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max<int>(d, a.size());
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::uint64_t Graph::open_mask(Vertex v) const {
    if (n() > 64) throw Error(ErrorCode::GraphTooLarge, "bitmask view needs n <= 64");
    std::uint64_t mask = 0;
    for (Vertex u : neighbors(v)) mask |= std::uint64_t{1} << u;
    return mask;
}

Graph build(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    int twice = 0;
    for (auto& a : g.adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        twice += static_cast<int>(a.size());
    }
    g.m_ = twice / 2;
    return g;
}

Graph induced(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<int> pos(g.n(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) pos[vertices[i]] = i;
    std::vector<Edge> es;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        for (Vertex w : g.neighbors(vertices[i]))
            if (pos[w] > i) es.emplace_back(i, pos[w]);
    return build(static_cast<int>(vertices.size()), es);
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    std::vector<Edge> es;
    int offset = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) es.emplace_back(u + offset, v + offset);
        offset += p.n();
    }
    return build(offset, es);
}

Graph disjoint_union(const Graph& g, int k) {
    if (k < 1) throw Error(ErrorCode::SizeBelowThreshold, "disjoint union needs k >= 1");
    return disjoint_union(std::vector<Graph>(k, g));
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<Vertex> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (Vertex w : g.neighbors(members[i]))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "negative vertex count");
    for (auto& [u, v] : edges_) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
}

int MultiGraph::degree(Vertex v) const {
    check_vertex(n_, v);
    int d = 0;
    for (auto [a, b] : edges_) d += (a == v) + (b == v);
    return d;
}

int MultiGraph::parallel_index(int i) const {
    int k = 0;
    while (i - k - 1 >= 0 && edges_[i - k - 1] == edges_[i]) ++k;
    return k;
}

MultiGraph as_multigraph(const Graph& g) { return MultiGraph(g.n(), g.edges()); }

MultiGraph with_multiplicity(const Graph& g, int k) {
    std::vector<Edge> es;
    for (const auto& e : g.edges())
        for (int i = 0; i < k; ++i) es.push_back(e);
    return MultiGraph(g.n(), es);
}

Graph subdivide(const MultiGraph& g) {
    std::vector<Edge> es;
    int next = g.n();
    for (auto [u, v] : g.edges()) {
        es.emplace_back(u, next);
        es.emplace_back(v, next);
        ++next;
    }
    return build(next, es);
}

bool is_split_partition(const Graph& g, const SplitPartition& p) {
    std::vector<int> side(g.n(), -1);
    for (Vertex v : p.clique) {
        if (v < 0 || v >= g.n() || side[v] >= 0) return false;
        side[v] = 0;
    }
    for (Vertex v : p.independent) {
        if (v < 0 || v >= g.n() || side[v] >= 0) return false;
        side[v] = 1;
    }
    for (int s : side)
        if (s < 0) return false;
    for (std::size_t i = 0; i < p.clique.size(); ++i)
        for (std::size_t j = i + 1; j < p.clique.size(); ++j)
            if (!g.adjacent(p.clique[i], p.clique[j])) return false;
    for (Vertex v : p.independent)
        for (Vertex w : g.neighbors(v))
            if (side[w] == 1) return false;
    return true;
}

std::optional<SplitPartition> is_split(const Graph& g) {
    std::vector<Vertex> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    int m = 0;
    for (int i = 0; i < g.n(); ++i)
        if (g.degree(order[i]) >= i) m = i + 1;
    long long left = 0, right = 0;
    for (int i = 0; i < g.n(); ++i) (i < m ? left : right) += g.degree(order[i]);
    if (left != static_cast<long long>(m) * (m - 1) + right) return std::nullopt;
    SplitPartition p;
    p.clique.assign(order.begin(), order.begin() + m);
    p.independent.assign(order.begin() + m, order.end());
    // A clique vertex with no neighbor across can move over; at most one can.
    if (p.clique.size() > 1) {
        std::vector<char> in_clique(g.n(), 0);
        for (Vertex v : p.clique) in_clique[v] = 1;
        for (std::size_t i = p.clique.size(); i-- > 0;) {
            Vertex v = p.clique[i];
            bool across = false;
            for (Vertex w : g.neighbors(v)) across = across || !in_clique[w];
            if (!across) {
                p.clique.erase(p.clique.begin() + static_cast<std::ptrdiff_t>(i));
                p.independent.push_back(v);
                break;
            }
        }
    }
    std::sort(p.clique.begin(), p.clique.end());
    std::sort(p.independent.begin(), p.independent.end());
    if (!is_split_partition(g, p)) return std::nullopt;
    return p;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    for (Vertex s = 0; s < g.n(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1, m = -1, lineno = 0;
    std::vector<Edge> es;
    auto fail = [&](const std::string& msg) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == 'c') continue;
        if (tag == "p") {
            std::string fmt;
            if (n >= 0) fail("duplicate header");
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0) fail("bad header");
        } else if (tag == "e") {
            long long u, v;
            if (n < 0) fail("edge before header");
            if (!(ls >> u >> v)) fail("bad edge line");
            if (u < 1 || u > n || v < 1 || v > n) fail("endpoint out of range");
            es.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            fail("unknown line tag '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) fail("trailing tokens");
    }
    if (n < 0) throw Error(ErrorCode::ParseError, "missing header");
    if (static_cast<int>(es.size()) != m)
        throw Error(ErrorCode::ParseError, "header announces " + std::to_string(m) +
                                               " edges, found " + std::to_string(es.size()));
    return build(n, es);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

Graph complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return build(n, es);
}

Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return build(n, es);
}

Graph path(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return build(n, es);
}

Graph star(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return build(leaves + 1, es);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return build(a + b, es);
}

Graph empty_graph(int n) { return build(n, {}); }

Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return build(10, es);
}

}  // namespace dominion
