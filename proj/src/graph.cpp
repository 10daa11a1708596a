#include "hvg/graph.hpp"

#include <algorithm>
#include <string>

#include "hvg/error.hpp"

namespace hvg {

namespace {

Edge normalized(Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
}

} // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw DomainError("graph needs at least one vertex, got n=" + std::to_string(n));
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
    for (Edge& e : edges) {
        e = normalized(e);
        if (e.first == e.second)
            throw DomainError("loop at vertex " + std::to_string(e.first));
        if (e.first < 1 || e.second > n_)
            throw DomainError("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                              "} out of range [1," + std::to_string(n_) + "]");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

Graph Graph::path(int n) {
    Graph g(n);
    g.edges_.reserve(n > 0 ? n - 1 : 0);
    for (int i = 1; i < n; ++i) g.edges_.emplace_back(i, i + 1);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw DomainError("vertex " + std::to_string(v) + " out of range [1," + std::to_string(n_) + "]");
}

bool Graph::has_edge(int i, int j) const {
    const Edge e = normalized({i, j});
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (const Edge& e : edges_)
        if (e.first == v || e.second == v) ++d;
    return d;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> deg(n_, 0);
    for (const Edge& e : edges_) {
        ++deg[e.first - 1];
        ++deg[e.second - 1];
    }
    return deg;
}

int Graph::max_neighbor(int v) const {
    check_vertex(v);
    int best = 0;
    for (const Edge& e : edges_) {
        if (e.first == v) best = std::max(best, e.second);
        else if (e.second == v) best = std::max(best, e.first);
    }
    if (best == 0)
        throw DomainError("vertex " + std::to_string(v) + " has no neighbors");
    return best;
}

int Graph::nesting_degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (const Edge& e : edges_)
        if (e.first < v && v < e.second) ++d;
    return d;
}

std::vector<int> Graph::nesting_profile() const {
    // Difference array: edge {i, j} covers vertices i+1 .. j-1.
    std::vector<int> diff(n_ + 2, 0);
    for (const Edge& e : edges_) {
        if (e.second > e.first + 1) {
            ++diff[e.first + 1];
            --diff[e.second];
        }
    }
    std::vector<int> profile(n_);
    int acc = 0;
    for (int v = 1; v <= n_; ++v) {
        acc += diff[v];
        profile[v - 1] = acc;
    }
    return profile;
}

std::vector<int> Graph::non_nested() const {
    const std::vector<int> profile = nesting_profile();
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
        if (profile[v - 1] == 0) out.push_back(v);
    return out;
}

bool Graph::is_non_crossing() const {
    for (std::size_t a = 0; a < edges_.size(); ++a)
        for (std::size_t b = a + 1; b < edges_.size(); ++b) {
            const auto [i, k] = edges_[a];
            const auto [j, l] = edges_[b];
            if ((i < j && j < k && k < l) || (j < i && i < l && l < k))
                return false;
        }
    return true;
}

Graph Graph::induced_interval(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i >= j)
        throw DomainError("invalid interval [" + std::to_string(i) + "," + std::to_string(j) + "]");
    std::vector<Edge> sub;
    for (const Edge& e : edges_)
        if (i <= e.first && e.second <= j)
            sub.emplace_back(e.first - i + 1, e.second - i + 1);
    return Graph(j - i + 1, std::move(sub));
}

Graph one_sum(const Graph& g, const Graph& h) {
    const int shift = g.size() - 1;
    std::vector<Edge> edges = g.edges();
    edges.reserve(edges.size() + h.edge_count());
    for (const Edge& e : h.edges())
        edges.emplace_back(e.first + shift, e.second + shift);
    return Graph(g.size() + h.size() - 1, std::move(edges));
}

Graph remove_edge(const Graph& g, Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        throw DomainError("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                          "} not in graph");
    if (e.second == e.first + 1)
        throw DomainError("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                          "} joins consecutive vertices and cannot be removed");
    std::vector<Edge> edges = g.edges();
    edges.erase(std::find(edges.begin(), edges.end(), e));
    return Graph(g.size(), std::move(edges));
}

Graph add_edge_non_nested(const Graph& g, int j, int l) {
    if (j > l) std::swap(j, l);
    if (j == l) throw DomainError("cannot add loop at vertex " + std::to_string(j));
    if (g.has_edge(j, l))
        throw DomainError("edge {" + std::to_string(j) + "," + std::to_string(l) + "} already present");
    if (g.nesting_degree(j) != 0 || g.nesting_degree(l) != 0)
        throw DomainError("both endpoints of the new edge must be non-nested");
    std::vector<Edge> edges = g.edges();
    edges.emplace_back(j, l);
    return Graph(g.size(), std::move(edges));
}

} // namespace hvg
