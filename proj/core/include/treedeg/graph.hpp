#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "treedeg/bitset.hpp"
#include "treedeg/errors.hpp"

namespace treedeg {

// Simple undirected graph, adjacency kept as one VertexSet row per vertex.
// Rows are the unit every algorithm in this project works in.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(checked_order(n)), adj_(size_t(n), VertexSet(n)) {}

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw PreconditionError("loops are not allowed");
        adj_[size_t(u)].set(v);
        adj_[size_t(v)].set(u);
    }
    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[size_t(u)].reset(v);
        adj_[size_t(v)].reset(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[size_t(u)].test(v);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[size_t(v)];
    }

    int degree(int v) const { return neighbors(v).count(); }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& row : adj_) twice += row.count();
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n_; ++u)
            adj_[size_t(u)].for_each([&](int v) {
                if (u < v) e.emplace_back(u, v);
            });
        return e;
    }

    bool operator==(const Graph&) const = default;

private:
    static int checked_order(int n) {
        if (n < 0) throw PreconditionError("vertex count must be nonnegative");
        return n;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw PreconditionError("vertex index out of range");
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Vertex sequence with consecutive entries adjacent; no repeats allowed.
struct Path {
    std::vector<int> verts;
    int size() const { return int(verts.size()); }
};

bool is_valid_path(const Graph& g, const Path& p);

// (min degree, max degree); rejects the empty graph.
std::pair<int, int> degree_stats(const Graph& g);

bool is_connected(const Graph& g);

// Connected components in ascending order of their minimum vertex index.
std::vector<VertexSet> components(const Graph& g);

// Path with at least min(n, 2*min_degree+1) vertices, found constructively by
// maximal extension plus endpoint rotation. Connected input required.
Path dirac_path(const Graph& g);

// Maximal path outside s0 starting at a neighbor of alpha. Requires
// s1 proper subset of s0, N(s1) inside s0, alpha in s0 with a neighbor outside.
// Resulting length is at least |s1| + min_degree - |s0| + 1.
Path escape_path(const Graph& g, const VertexSet& s0, const VertexSet& s1, int alpha);

// alpha adjacent to both beta and gamma, beta/gamma non-adjacent.
struct P3 {
    int alpha, beta, gamma;
    bool operator==(const P3&) const = default;
};

// Induced two-edge path in a connected graph on >= 3 vertices; empty exactly
// when the graph is complete. Deterministic: first non-adjacent pair in lex
// order, joined by a lowest-index-preference BFS shortest path.
std::optional<P3> induced_p3(const Graph& g);

// part_size t if the graph is exactly K_{t,t}.
std::optional<int> is_balanced_bipartite_ktt(const Graph& g);

struct MultipartiteShape {
    int parts;      // number of classes
    int part_size;  // common class size
    bool operator==(const MultipartiteShape&) const = default;
};

// Recognizes complete multipartite graphs with equal class sizes via the
// non-adjacency-classes test. Complete graphs come back as (n, 1).
std::optional<MultipartiteShape> is_balanced_complete_multipartite(const Graph& g);

Graph complement(const Graph& g);
Graph disjoint_union(std::span<const Graph> parts);
// Subgraph induced on `keep`; vertices relabelled 0..k-1 in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// Factories.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // center 0, leaves 1..leaves
Graph complete_bipartite(int s, int t);
Graph complete_multipartite(int parts, int part_size);

} // namespace treedeg
