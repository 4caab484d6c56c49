#include "treedeg/graph.hpp"

#include <algorithm>
#include <deque>

namespace treedeg {

bool is_valid_path(const Graph& g, const Path& p) {
    const int n = g.vertex_count();
    VertexSet seen(n);
    for (size_t i = 0; i < p.verts.size(); ++i) {
        int v = p.verts[i];
        if (v < 0 || v >= n) return false;
        if (seen.test(v)) return false;
        seen.set(v);
        if (i > 0 && !g.has_edge(p.verts[i - 1], v)) return false;
    }
    return true;
}

std::pair<int, int> degree_stats(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw EmptyGraphError();
    int lo = n, hi = 0;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

std::vector<VertexSet> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> comps;
    VertexSet visited(n);
    for (int s = 0; s < n; ++s) {
        if (visited.test(s)) continue;
        VertexSet comp(n);
        std::deque<int> q{s};
        comp.set(s);
        visited.set(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            g.neighbors(v).for_each([&](int w) {
                if (!visited.test(w)) {
                    visited.set(w);
                    comp.set(w);
                    q.push_back(w);
                }
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return components(g).size() == 1;
}

namespace {

// Extend the back of `path` while a free neighbor exists (lowest index first).
void extend_back(const Graph& g, std::vector<int>& path, VertexSet& on_path) {
    while (true) {
        VertexSet cand = g.neighbors(path.back()) - on_path;
        int w = cand.first();
        if (w < 0) return;
        path.push_back(w);
        on_path.set(w);
    }
}

} // namespace

Path dirac_path(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw EmptyGraphError();
    if (!is_connected(g)) throw DisconnectedError("dirac_path");

    const int delta = degree_stats(g).first;
    const int target = std::min(n, 2 * delta + 1);

    std::vector<int> path{0};
    VertexSet on_path(n);
    on_path.set(0);

    while (true) {
        extend_back(g, path, on_path);
        std::reverse(path.begin(), path.end());
        extend_back(g, path, on_path);
        std::reverse(path.begin(), path.end());
        const int len = int(path.size());
        if (len >= target) return Path{std::move(path)};

        // Both endpoints exhausted. Close the path into a cycle: either the
        // endpoints are adjacent, or a crossing pair p[i] ~ back, p[i+1] ~ front
        // exists whenever len <= 2*delta.
        const int front = path.front(), back = path.back();
        std::vector<int> cycle;
        if (g.has_edge(front, back)) {
            cycle = path;
        } else {
            int cross = -1;
            for (int i = 0; i + 1 < len; ++i) {
                if (g.has_edge(path[size_t(i)], back) && g.has_edge(path[size_t(i) + 1], front)) {
                    cross = i;
                    break;
                }
            }
            if (cross < 0)
                throw InternalContradictionError("rotation step found no crossing pair");
            cycle.assign(path.begin(), path.begin() + cross + 1);
            for (int i = len - 1; i > cross; --i) cycle.push_back(path[size_t(i)]);
        }

        // Connected and len < n, so some cycle vertex sees the outside; absorb
        // that neighbor and grow the path by one.
        int pivot = -1, fresh = -1;
        for (int idx = 0; idx < len && pivot < 0; ++idx) {
            VertexSet out = g.neighbors(cycle[size_t(idx)]) - on_path;
            int w = out.first();
            if (w >= 0) {
                pivot = idx;
                fresh = w;
            }
        }
        if (pivot < 0)
            throw InternalContradictionError("cycle spans a proper disconnected subset");
        std::vector<int> next{fresh};
        for (int k = 0; k < len; ++k) next.push_back(cycle[size_t(((pivot - k) % len + len) % len)]);
        path = std::move(next);
        on_path.set(fresh);
    }
}

Path escape_path(const Graph& g, const VertexSet& s0, const VertexSet& s1, int alpha) {
    const int n = g.vertex_count();
    if (n == 0) throw EmptyGraphError();
    if (s0.universe() != n || s1.universe() != n)
        throw PreconditionError("s0/s1 universe must match the graph");
    if (!s1.is_subset_of(s0) || s1 == s0)
        throw PreconditionError("s1 must be a proper subset of s0");
    bool s1_closed = true;
    s1.for_each([&](int v) {
        if (!g.neighbors(v).is_subset_of(s0)) s1_closed = false;
    });
    if (!s1_closed) throw PreconditionError("N(s1) must lie inside s0");
    if (alpha < 0 || alpha >= n || !s0.test(alpha))
        throw PreconditionError("alpha must lie in s0");

    VertexSet start_cand = g.neighbors(alpha) - s0;
    int start = start_cand.first();
    if (start < 0) throw PreconditionError("alpha needs a neighbor outside s0");

    std::vector<int> path{start};
    VertexSet blocked = s0;
    blocked.set(start);
    while (true) {
        VertexSet cand = g.neighbors(path.back()) - blocked;
        int w = cand.first();
        if (w < 0) break;
        path.push_back(w);
        blocked.set(w);
    }
    return Path{std::move(path)};
}

std::optional<P3> induced_p3(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw EmptyGraphError();
    if (n < 3) throw PreconditionError("induced_p3 needs at least 3 vertices");
    if (!is_connected(g)) throw DisconnectedError("induced_p3");

    int u = -1, v = -1;
    for (int a = 0; a < n && u < 0; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!g.has_edge(a, b)) {
                u = a;
                v = b;
                break;
            }
    if (u < 0) return std::nullopt;  // complete

    // Lowest-index-preference BFS from u; the first three vertices of the
    // shortest path to v give the triple (consecutive, ends non-adjacent).
    std::vector<int> parent(size_t(n), -1);
    std::deque<int> q{u};
    parent[size_t(u)] = u;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        g.neighbors(x).for_each([&](int y) {
            if (parent[size_t(y)] < 0) {
                parent[size_t(y)] = x;
                q.push_back(y);
            }
        });
    }
    std::vector<int> rev;
    for (int x = v; x != u; x = parent[size_t(x)]) rev.push_back(x);
    rev.push_back(u);
    std::reverse(rev.begin(), rev.end());
    return P3{rev[1], rev[0], rev[2]};
}

std::optional<MultipartiteShape> is_balanced_complete_multipartite(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw EmptyGraphError();
    VertexSet assigned(n);
    std::vector<VertexSet> classes;
    for (int v = 0; v < n; ++v) {
        if (assigned.test(v)) continue;
        VertexSet cls = g.neighbors(v).complement();  // non-neighbors incl. v
        bool consistent = true;
        cls.for_each([&](int u) {
            if (g.neighbors(u).complement() != cls) consistent = false;
        });
        if (!consistent) return std::nullopt;
        classes.push_back(cls);
        assigned |= cls;
    }
    const int a = classes.front().count();
    for (const auto& c : classes)
        if (c.count() != a) return std::nullopt;
    return MultipartiteShape{int(classes.size()), a};
}

std::optional<int> is_balanced_bipartite_ktt(const Graph& g) {
    auto shape = is_balanced_complete_multipartite(g);
    if (shape && shape->parts == 2) return shape->part_size;
    return std::nullopt;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

Graph disjoint_union(std::span<const Graph> parts) {
    int total = 0;
    for (const auto& p : parts) total += p.vertex_count();
    Graph g(total);
    int base = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) g.add_edge(base + u, base + v);
        base += p.vertex_count();
    }
    return g;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (keep.universe() != g.vertex_count())
        throw PreconditionError("keep universe must match the graph");
    std::vector<int> label(size_t(g.vertex_count()), -1);
    int k = 0;
    keep.for_each([&](int v) { label[size_t(v)] = k++; });
    Graph h(k);
    keep.for_each([&](int u) {
        (g.neighbors(u) & keep).for_each([&](int v) {
            if (u < v) h.add_edge(label[size_t(u)], label[size_t(v)]);
        });
    });
    return h;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycles need at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_bipartite(int s, int t) {
    Graph g(s + t);
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) g.add_edge(u, s + v);
    return g;
}

Graph complete_multipartite(int parts, int part_size) {
    if (parts < 1 || part_size < 1)
        throw PreconditionError("multipartite shape must be positive");
    const int n = parts * part_size;
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / part_size != v / part_size) g.add_edge(u, v);
    return g;
}

} // namespace treedeg
