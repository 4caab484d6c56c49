#include "treedeg/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace treedeg {

namespace {

// BFS distances from a set of sources; -1 for unreachable.
std::vector<int> bfs_dist(const Graph& g, const std::vector<int>& sources) {
    std::vector<int> dist(size_t(g.vertex_count()), -1);
    std::deque<int> q;
    for (int s : sources) {
        dist[size_t(s)] = 0;
        q.push_back(s);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        g.neighbors(v).for_each([&](int w) {
            if (dist[size_t(w)] < 0) {
                dist[size_t(w)] = dist[size_t(v)] + 1;
                q.push_back(w);
            }
        });
    }
    return dist;
}

// Unique u-v path in a tree.
std::vector<int> tree_path(const Graph& g, int u, int v) {
    std::vector<int> parent(size_t(g.vertex_count()), -1);
    std::deque<int> q{u};
    parent[size_t(u)] = u;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (x == v) break;
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
    return rev;
}

Path lex_smallest_longest_path(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return Path{{0}};
    // All-pairs distances; n stays desk scale for trees.
    auto dist = std::vector<std::vector<int>>(size_t(n));
    int diam = 0;
    for (int v = 0; v < n; ++v) {
        dist[size_t(v)] = bfs_dist(g, {v});
        for (int w = 0; w < n; ++w) diam = std::max(diam, dist[size_t(v)][size_t(w)]);
    }
    std::vector<int> best;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || dist[size_t(u)][size_t(v)] != diam) continue;
            std::vector<int> p = tree_path(g, u, v);
            if (best.empty() || p < best) best = std::move(p);
        }
    return Path{std::move(best)};
}

} // namespace

Tree::Tree(Graph g) : g_(std::move(g)) {
    const int n = g_.vertex_count();
    if (n == 0) throw NotATreeError("empty graph");
    if (g_.edge_count() != n - 1) throw NotATreeError("edge count must be n-1");
    if (!is_connected(g_)) throw NotATreeError("disconnected");
    max_degree_ = (n == 1) ? 0 : degree_stats(g_).second;
    longest_path_ = lex_smallest_longest_path(g_);
}

bool is_conventional(const Tree& t, const ConventionalLabelling& lab) {
    const int n = t.vertex_count();
    if (int(lab.order.size()) != n || int(lab.parent_pos.size()) != n) return false;
    std::vector<int> pos(size_t(n), -1);
    for (int j = 0; j < n; ++j) {
        int v = lab.order[size_t(j)];
        if (v < 0 || v >= n || pos[size_t(v)] >= 0) return false;
        pos[size_t(v)] = j;
    }
    if (lab.parent_pos[0] != -1) return false;
    for (int j = 1; j < n; ++j) {
        int v = lab.order[size_t(j)];
        int earlier = 0, parent_at = -1;
        t.neighbors(v).for_each([&](int w) {
            if (pos[size_t(w)] < j) {
                ++earlier;
                parent_at = pos[size_t(w)];
            }
        });
        if (earlier != 1 || lab.parent_pos[size_t(j)] != parent_at) return false;
    }
    return true;
}

ConventionalLabelling conventional_labelling_bfs(const Tree& t, int root) {
    const int n = t.vertex_count();
    if (root < 0 || root >= n) throw PreconditionError("root out of range");
    ConventionalLabelling lab;
    lab.order.reserve(size_t(n));
    lab.parent_pos.assign(size_t(n), -1);
    std::vector<int> pos(size_t(n), -1);
    std::deque<int> q{root};
    pos[size_t(root)] = 0;
    lab.order.push_back(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        t.neighbors(v).for_each([&](int w) {  // ascending by VertexSet order
            if (pos[size_t(w)] < 0) {
                pos[size_t(w)] = int(lab.order.size());
                lab.parent_pos[lab.order.size()] = pos[size_t(v)];
                lab.order.push_back(w);
                q.push_back(w);
            }
        });
    }
    return lab;
}

ConventionalLabelling proof_labelling(const Tree& t) {
    const int n = t.vertex_count();
    const auto& P = t.longest_path().verts;
    const int L = int(P.size());

    ConventionalLabelling lab;
    lab.order.reserve(size_t(n));
    lab.parent_pos.assign(size_t(n), -1);

    if (L <= 2) {
        for (int v : P) lab.order.push_back(v);
        if (L == 2) lab.parent_pos[1] = 0;
        return lab;
    }
    if (L == 3) throw StarNotSupportedError();

    auto pos_of = [&](const std::vector<int>& order, int v) {
        for (int j = 0; j < int(order.size()); ++j)
            if (order[size_t(j)] == v) return j;
        return -1;
    };

    if (L == 4) {
        // Double star. The center with more leaves is labelled second and two
        // of its leaves go last, mirroring the |P|=4 strategy; plain P_4 keeps
        // the path endpoints last with their distinct parents.
        int c1 = P[1], c2 = P[2];
        auto leaves_of = [&](int c) {
            std::vector<int> ls;
            t.neighbors(c).for_each([&](int w) {
                if (t.degree(w) == 1) ls.push_back(w);
            });
            return ls;
        };
        std::vector<int> l1 = leaves_of(c1), l2 = leaves_of(c2);
        if (l1.size() > l2.size() || (l1.size() == l2.size() && c1 < c2)) {
            std::swap(c1, c2);
            std::swap(l1, l2);
        }
        // Now c2 carries the most leaves (ties broken toward the lower index).
        lab.order.push_back(c1);
        lab.order.push_back(c2);
        std::vector<int> tail;
        if (l2.size() >= 2) {
            tail = {l2[l2.size() - 2], l2[l2.size() - 1]};
            l2.resize(l2.size() - 2);
        } else {
            tail = {l1.back(), l2.back()};  // P_4: endpoints keep distinct parents
            l1.pop_back();
            l2.pop_back();
        }
        std::vector<int> mid;
        mid.insert(mid.end(), l1.begin(), l1.end());
        mid.insert(mid.end(), l2.begin(), l2.end());
        std::sort(mid.begin(), mid.end());
        for (int v : mid) lab.order.push_back(v);
        for (int v : tail) lab.order.push_back(v);
        for (int j = 1; j < n; ++j) {
            int v = lab.order[size_t(j)];
            lab.parent_pos[size_t(j)] = t.neighbors(v).test(c1) ? pos_of(lab.order, c1) : 1;
        }
        lab.parent_pos[1] = 0;
        return lab;
    }

    // General case: interior spine first, off-path vertices by distance to the
    // path (ties ascending), path endpoints last. Longest-path endpoints are
    // leaves, so every off-path vertex hangs off the interior.
    const int i = L - 2;
    for (int j = 1; j <= i; ++j) lab.order.push_back(P[size_t(j)]);

    std::vector<int> dist = bfs_dist(t.graph(), std::vector<int>(P.begin(), P.end()));
    std::vector<int> off;
    for (int v = 0; v < n; ++v)
        if (dist[size_t(v)] > 0) off.push_back(v);
    std::sort(off.begin(), off.end(), [&](int a, int b) {
        if (dist[size_t(a)] != dist[size_t(b)]) return dist[size_t(a)] < dist[size_t(b)];
        return a < b;
    });
    for (int v : off) lab.order.push_back(v);
    lab.order.push_back(P[0]);
    lab.order.push_back(P[size_t(L) - 1]);

    std::vector<int> pos(size_t(n), -1);
    for (int j = 0; j < n; ++j) pos[size_t(lab.order[size_t(j)])] = j;
    for (int j = 1; j < i; ++j) lab.parent_pos[size_t(j)] = j - 1;
    for (int j = i; j < n - 2; ++j) {
        int v = lab.order[size_t(j)];
        int parent = -1;
        t.neighbors(v).for_each([&](int w) {
            if (dist[size_t(w)] == dist[size_t(v)] - 1) parent = w;
        });
        lab.parent_pos[size_t(j)] = pos[size_t(parent)];
    }
    lab.parent_pos[size_t(n) - 2] = 0;      // first endpoint hangs on v_1
    lab.parent_pos[size_t(n) - 1] = i - 1;  // second endpoint hangs on v_i
    return lab;
}

Tree make_tpq(int p, int q) {
    if (p < 1 || q < 1)
        throw DegenerateShapeError("both leaf counts must be at least 1");
    Graph g(3 + p + q);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    for (int k = 0; k < p; ++k) g.add_edge(0, 3 + k);
    for (int k = 0; k < q; ++k) g.add_edge(2, 3 + p + k);
    return Tree(std::move(g));
}

std::optional<TpqShape> recognize_tpq(const Tree& t) {
    const int n = t.vertex_count();
    if (n < 5) return std::nullopt;
    std::vector<int> spine;
    for (int v = 0; v < n; ++v)
        if (t.degree(v) >= 2) spine.push_back(v);
    if (spine.size() != 3) return std::nullopt;
    // The three non-leaves must form a path whose middle vertex has degree 2.
    int mid = -1;
    for (int v : spine) {
        int hits = 0;
        for (int w : spine)
            if (w != v && t.graph().has_edge(v, w)) ++hits;
        if (hits == 2) {
            if (mid >= 0) return std::nullopt;
            mid = v;
        }
    }
    if (mid < 0 || t.degree(mid) != 2) return std::nullopt;
    int a = -1, c = -1;
    for (int v : spine)
        if (v != mid) (a < 0 ? a : c) = v;
    if (!t.graph().has_edge(a, mid) || !t.graph().has_edge(c, mid)) return std::nullopt;
    const int p = t.degree(a) - 1, q = t.degree(c) - 1;
    if (3 + p + q != n) return std::nullopt;  // some vertex not a leaf of a/c
    return TpqShape{std::min(p, q), std::max(p, q)};
}

bool is_t1_nminus4(const Tree& t) {
    auto s = recognize_tpq(t);
    return s && s->p == 1 && s->q == t.vertex_count() - 4;
}

Tree prufer_decode(std::span<const int> seq) {
    const int n = int(seq.size()) + 2;
    for (int x : seq)
        if (x < 0 || x >= n) throw PreconditionError("prufer entry out of range");
    std::vector<int> deg(size_t(n), 1);
    for (int x : seq) ++deg[size_t(x)];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[size_t(v)] == 1) leaves.push(v);
    Graph g(n);
    for (int x : seq) {
        int leaf = leaves.top();
        leaves.pop();
        g.add_edge(leaf, x);
        if (--deg[size_t(x)] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    g.add_edge(a, leaves.top());
    return Tree(std::move(g));
}

std::vector<int> prufer_encode(const Tree& t) {
    const int n = t.vertex_count();
    if (n < 2) throw PreconditionError("prufer encoding needs at least 2 vertices");
    std::vector<int> deg(size_t(n), 0);
    std::vector<VertexSet> adj;
    for (int v = 0; v < n; ++v) {
        deg[size_t(v)] = t.degree(v);
        adj.push_back(t.neighbors(v));
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[size_t(v)] == 1) leaves.push(v);
    std::vector<int> seq;
    seq.reserve(size_t(n) - 2);
    for (int step = 0; step < n - 2; ++step) {
        int leaf = leaves.top();
        leaves.pop();
        int parent = adj[size_t(leaf)].first();
        seq.push_back(parent);
        adj[size_t(parent)].reset(leaf);
        deg[size_t(leaf)] = 0;
        if (--deg[size_t(parent)] == 1) leaves.push(parent);
    }
    return seq;
}

std::vector<int> tree_centers(const Tree& t) {
    const int n = t.vertex_count();
    if (n == 1) return {0};
    std::vector<int> deg(size_t(n), 0);
    for (int v = 0; v < n; ++v) deg[size_t(v)] = t.degree(v);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[size_t(v)] == 1) layer.push_back(v);
    int remaining = n;
    std::vector<char> removed(size_t(n), 0);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[size_t(v)] = 1;
            --remaining;
            t.neighbors(v).for_each([&](int w) {
                if (!removed[size_t(w)] && --deg[size_t(w)] == 1) next.push_back(w);
            });
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[size_t(v)]) centers.push_back(v);
    return centers;
}

namespace {

std::string ahu_rooted(const Tree& t, int root) {
    const int n = t.vertex_count();
    // Iterative post-order to keep deep paths cheap on the stack.
    std::vector<int> parent(size_t(n), -1), order;
    order.reserve(size_t(n));
    std::deque<int> q{root};
    parent[size_t(root)] = root;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        order.push_back(v);
        t.neighbors(v).for_each([&](int w) {
            if (parent[size_t(w)] < 0) {
                parent[size_t(w)] = v;
                q.push_back(w);
            }
        });
    }
    auto enc = std::vector<std::string>(size_t(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<std::string> kids;
        t.neighbors(v).for_each([&](int w) {
            if (parent[size_t(w)] == v && w != root) kids.push_back(enc[size_t(w)]);
        });
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (auto& k : kids) s += k;
        s += ")";
        enc[size_t(v)] = std::move(s);
    }
    return enc[size_t(root)];
}

} // namespace

std::string ahu_canonical_string(const Tree& t) {
    auto centers = tree_centers(t);
    std::string best = ahu_rooted(t, centers[0]);
    if (centers.size() == 2) best = std::min(best, ahu_rooted(t, centers[1]));
    return best;
}

std::vector<Tree> enumerate_trees(int n, int max_degree) {
    if (n < 1) throw PreconditionError("tree order must be positive");
    if (n > 12) throw DeskScaleError("tree enumeration is capped at 12 vertices");
    if (max_degree >= 0 && max_degree < 1 && n >= 2) return {};

    // Grow by attaching a fresh leaf to every vertex of every class
    // representative; AHU strings dedupe. Removing a leaf never raises a
    // degree, so filtering during growth stays complete.
    std::map<std::string, Graph> level;
    level.emplace(ahu_canonical_string(Tree(Graph(1))), Graph(1));
    for (int k = 1; k < n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [key, g] : level) {
            for (int v = 0; v < k; ++v) {
                if (max_degree >= 0 &&
                    (g.degree(v) + 1 > max_degree || (k >= 2 && max_degree < 1)))
                    continue;
                Graph h(k + 1);
                for (auto [a, b] : g.edges()) h.add_edge(a, b);
                h.add_edge(v, k);
                Tree cand(std::move(h));
                if (max_degree >= 0 && cand.max_degree() > max_degree) continue;
                std::string s = ahu_canonical_string(cand);
                next.emplace(std::move(s), cand.graph());
            }
        }
        level = std::move(next);
    }
    std::vector<Tree> out;
    out.reserve(level.size());
    for (auto& [key, g] : level) {
        Tree t(g);
        if (max_degree >= 0 && t.max_degree() > max_degree) continue;
        out.push_back(std::move(t));
    }
    return out;
}

std::string to_parent_array(const Tree& t) {
    const int n = t.vertex_count();
    std::vector<int> dist = bfs_dist(t.graph(), {0});
    std::ostringstream out;
    out << n << '\n';
    for (int v = 1; v < n; ++v) {
        int parent = -1;
        t.neighbors(v).for_each([&](int w) {
            if (dist[size_t(w)] == dist[size_t(v)] - 1) parent = w;
        });
        out << parent << '\n';
    }
    return out.str();
}

Tree from_parent_array(std::string_view text) {
    std::istringstream in{std::string(text)};
    int n;
    if (!(in >> n) || n < 1) throw ParseError("parent array: bad vertex count");
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        int p;
        if (!(in >> p)) throw ParseError("parent array: missing entry");
        if (p < 0 || p >= n) throw ParseError("parent array: parent out of range");
        g.add_edge(v, p);
    }
    return Tree(std::move(g));
}

} // namespace treedeg
