#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace hvg {

// Vertices are 1-based; an edge always stores the smaller endpoint first.
using Edge = std::pair<int, int>;

// Immutable simple graph on the linearly ordered vertex set {1, ..., n}.
// Edges are kept sorted lexicographically with no duplicates and no loops,
// so equality and ordering of Graph values are canonical.
class Graph {
public:
    // Graph with n >= 1 vertices and no edges.
    explicit Graph(int n);

    // Graph with the given edges.  Endpoint order inside each pair is
    // normalized, duplicates are collapsed, loops and out-of-range
    // endpoints are rejected.
    Graph(int n, std::vector<Edge> edges);

    // Path graph 1 - 2 - ... - n.
    static Graph path(int n);

    int size() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(int i, int j) const;

    int degree(int v) const;
    std::vector<int> degree_sequence() const;

    // Largest neighbor of v; throws if v has no neighbors.
    int max_neighbor(int v) const;

    // Number of edges {i, j} with i < v < j.
    int nesting_degree(int v) const;

    // nesting_degree for every vertex in one O(n + |E|) sweep.
    std::vector<int> nesting_profile() const;

    // Ascending list of vertices with nesting degree zero.
    std::vector<int> non_nested() const;

    // True when no two edges {i, k}, {j, l} satisfy i < j < k < l.
    bool is_non_crossing() const;

    // Subgraph induced by {i, ..., j} (requires i < j), relabeled to
    // start at vertex 1.
    Graph induced_interval(int i, int j) const;

    friend bool operator==(const Graph&, const Graph&) = default;
    friend std::strong_ordering operator<=>(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<Edge> edges_;
};

// Glue h's first vertex onto g's last vertex: the result has
// g.size() + h.size() - 1 vertices, g's edges, and h's edges shifted by
// g.size() - 1.  A single-vertex operand acts as the identity.
Graph one_sum(const Graph& g, const Graph& h);

// Remove an existing edge that is not one of the path edges {i, i+1}.
Graph remove_edge(const Graph& g, Edge e);

// Insert the missing edge {j, l}; both endpoints must have nesting
// degree zero.
Graph add_edge_non_nested(const Graph& g, int j, int l);

// True when g is the horizontal visibility graph of some data sequence.
// Decided by rebuilding from the graph's canonical realization.
bool is_hvg(const Graph& g);

} // namespace hvg
