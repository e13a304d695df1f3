#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dominion {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph. Neighbor lists are sorted and duplicate free.
class Graph {
public:
    Graph() = default;

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    const std::vector<Vertex>& neighbors(Vertex v) const;
    std::vector<Vertex> closed_neighborhood(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    int min_degree() const;
    int max_degree() const;
    // Edges (u,v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    // Bitmask views, valid only when n() <= 64.
    std::uint64_t open_mask(Vertex v) const;
    std::uint64_t closed_mask(Vertex v) const { return open_mask(v) | (std::uint64_t{1} << v); }

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

    friend Graph build(int n, const std::vector<Edge>& edges);

private:
    std::vector<std::vector<Vertex>> adj_;
    int m_ = 0;
};

Graph build(int n, const std::vector<Edge>& edges);
Graph induced(const Graph& g, const std::vector<Vertex>& vertices);
Graph disjoint_union(const Graph& g, int k);
Graph disjoint_union(const std::vector<Graph>& parts);
std::vector<std::vector<Vertex>> components(const Graph& g);

class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    // Edge list, each pair normalized to (min,max) and sorted; parallel copies adjacent.
    const std::vector<Edge>& edges() const { return edges_; }
    int degree(Vertex v) const;
    // Parallel index of edge i among copies of the same pair.
    int parallel_index(int i) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

MultiGraph as_multigraph(const Graph& g);
MultiGraph with_multiplicity(const Graph& g, int k);

// Every edge becomes a path of length two. Original ids are kept and the
// subdivision vertices follow in edge order.
Graph subdivide(const MultiGraph& g);

struct SplitPartition {
    std::vector<Vertex> clique;
    std::vector<Vertex> independent;
};

std::optional<SplitPartition> is_split(const Graph& g);
bool is_split_partition(const Graph& g, const SplitPartition& p);
bool is_bipartite(const Graph& g);

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

// Named small graphs used across tests and families.
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
Graph empty_graph(int n);
Graph petersen();

}  // namespace dominion
