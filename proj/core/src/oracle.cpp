#include "treedeg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <random>
#include <sstream>

#include "treedeg/errors.hpp"
#include "treedeg/graph_io.hpp"
#include "treedeg/parallel.hpp"

namespace treedeg {

std::optional<Embedding> subgraph_embed(const Graph& pattern, const Graph& host) {
    const int pn = pattern.vertex_count(), hn = host.vertex_count();
    if (pn > hn) throw PreconditionError("pattern has more vertices than host");
    Embedding emb(pn, hn);
    if (pn == 0) return emb;

    // Static variable order: most placed neighbours first (ties: higher
    // degree, then lower index), so each component grows connected from a
    // max-degree anchor.
    std::vector<int> order;
    order.reserve(size_t(pn));
    std::vector<char> chosen(size_t(pn), 0);
    std::vector<int> placed_nbrs(size_t(pn), 0);
    for (int step = 0; step < pn; ++step) {
        int best = -1;
        for (int u = 0; u < pn; ++u) {
            if (chosen[size_t(u)]) continue;
            if (best < 0 || placed_nbrs[size_t(u)] > placed_nbrs[size_t(best)] ||
                (placed_nbrs[size_t(u)] == placed_nbrs[size_t(best)] &&
                 pattern.degree(u) > pattern.degree(best)))
                best = u;
        }
        chosen[size_t(best)] = 1;
        order.push_back(best);
        pattern.neighbors(best).for_each([&](int w) { ++placed_nbrs[size_t(w)]; });
    }
    // Pattern neighbours of order[i] that precede it in the order.
    auto anchors = std::vector<std::vector<int>>(size_t(pn));
    std::vector<int> pos(size_t(pn), 0);
    for (int i = 0; i < pn; ++i) pos[size_t(order[size_t(i)])] = i;
    for (int i = 0; i < pn; ++i)
        pattern.neighbors(order[size_t(i)]).for_each([&](int w) {
            if (pos[size_t(w)] < i) anchors[size_t(i)].push_back(w);
        });

    std::function<bool(int)> dfs = [&](int i) -> bool {
        if (i == pn) return true;
        const int u = order[size_t(i)];
        VertexSet cand = anchors[size_t(i)].empty()
                             ? VertexSet::full(hn)
                             : host.neighbors(emb.host_of(anchors[size_t(i)][0]));
        for (std::size_t j = 1; j < anchors[size_t(i)].size(); ++j)
            cand &= host.neighbors(emb.host_of(anchors[size_t(i)][j]));
        cand -= emb.used;
        const int du = pattern.degree(u);
        for (int x = cand.first(); x >= 0; x = cand.next(x)) {
            if (host.degree(x) < du) continue;
            emb.assign(u, x);
            if (dfs(i + 1)) return true;
            emb.unassign(u);
        }
        return false;
    };
    if (dfs(0)) return emb;
    return std::nullopt;
}

namespace {

// Canonical labeling search over the equitable-refinement tree. Leaves are
// discrete partitions; the canonical labeling minimizes the relabeled
// adjacency rows. Automorphisms discovered at leaves that repeat the first
// leaf's encoding prune sibling branches (orbit pruning).
struct CanonSearch {
    int n;
    std::vector<std::uint32_t> adj;
    std::vector<std::uint32_t> best_rows;
    std::vector<int> best_label;
    bool have_best = false;
    std::vector<std::uint32_t> first_rows;
    std::vector<int> first_label;
    bool have_first = false;
    std::vector<std::vector<int>> gens;

    explicit CanonSearch(const Graph& g) : n(g.vertex_count()) {
        adj.assign(size_t(n), 0);
        for (int v = 0; v < n; ++v)
            g.neighbors(v).for_each(
                [&](int w) { adj[size_t(v)] |= std::uint32_t(1) << w; });
    }

    std::vector<std::uint32_t> relabeled_rows(const std::vector<int>& label) const {
        std::vector<std::uint32_t> rows(size_t(n), 0);
        for (int v = 0; v < n; ++v) {
            std::uint32_t m = adj[size_t(v)];
            while (m) {
                int w = std::countr_zero(m);
                m &= m - 1;
                rows[size_t(label[size_t(v)])] |= std::uint32_t(1) << label[size_t(w)];
            }
        }
        return rows;
    }

    // Splits every cell by neighbour counts against all cells until stable.
    // Subcells are ordered by count vector, so the refinement commutes with
    // relabeling.
    void refine(std::vector<std::vector<int>>& cells) const {
        for (;;) {
            std::vector<std::uint32_t> cmask(cells.size(), 0);
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) cmask[c] |= std::uint32_t(1) << v;
            std::vector<std::vector<int>> out;
            out.reserve(cells.size());
            bool split = false;
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    out.push_back(cell);
                    continue;
                }
                std::map<std::vector<int>, std::vector<int>> groups;
                for (int v : cell) {
                    std::vector<int> key(cells.size());
                    for (std::size_t c = 0; c < cells.size(); ++c)
                        key[c] = std::popcount(adj[size_t(v)] & cmask[c]);
                    groups[key].push_back(v);
                }
                if (groups.size() > 1) split = true;
                for (auto& [key, members] : groups) out.push_back(members);
            }
            cells = std::move(out);
            if (!split) return;
        }
    }

    void record_automorphism(const std::vector<int>& label) {
        std::vector<int> inv_first(size_t(n), 0);
        for (int v = 0; v < n; ++v) inv_first[size_t(first_label[size_t(v)])] = v;
        std::vector<int> a(size_t(n), 0);
        bool identity = true;
        for (int v = 0; v < n; ++v) {
            a[size_t(v)] = inv_first[size_t(label[size_t(v)])];
            if (a[size_t(v)] != v) identity = false;
        }
        if (identity || gens.size() >= 64) return;
        for (auto& g : gens)
            if (g == a) return;
        gens.push_back(std::move(a));
    }

    // True when some stored automorphism fixing the individualized prefix
    // maps an already-tried cell member to v.
    bool orbit_pruned(int v, const std::vector<int>& tried,
                      const std::vector<int>& prefix) const {
        if (tried.empty() || gens.empty()) return false;
        std::vector<int> uf(size_t(n), 0);
        for (int i = 0; i < n; ++i) uf[size_t(i)] = i;
        std::function<int(int)> find = [&](int x) {
            while (uf[size_t(x)] != x) x = uf[size_t(x)] = uf[size_t(uf[size_t(x)])];
            return x;
        };
        bool any = false;
        for (auto& a : gens) {
            bool fixes = true;
            for (int p : prefix)
                if (a[size_t(p)] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            any = true;
            for (int x = 0; x < n; ++x) {
                int r1 = find(x), r2 = find(a[size_t(x)]);
                if (r1 != r2) uf[size_t(r1)] = r2;
            }
        }
        if (!any) return false;
        for (int u : tried)
            if (find(u) == find(v)) return true;
        return false;
    }

    void dfs(std::vector<std::vector<int>> cells, std::vector<int>& prefix) {
        refine(cells);
        int target = -1;
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1) {
                target = int(c);
                break;
            }
        if (target < 0) {
            std::vector<int> label(size_t(n), 0);
            for (std::size_t c = 0; c < cells.size(); ++c)
                label[size_t(cells[c][0])] = int(c);
            auto rows = relabeled_rows(label);
            if (!have_first) {
                have_first = true;
                first_rows = rows;
                first_label = label;
            } else if (rows == first_rows) {
                record_automorphism(label);
            }
            if (!have_best || rows < best_rows) {
                have_best = true;
                best_rows = std::move(rows);
                best_label = std::move(label);
            }
            return;
        }
        std::vector<int> tried;
        for (int v : cells[size_t(target)]) {
            if (orbit_pruned(v, tried, prefix)) continue;
            auto next = cells;
            std::vector<int> rest;
            for (int w : cells[size_t(target)])
                if (w != v) rest.push_back(w);
            next[size_t(target)] = {v};
            next.insert(next.begin() + target + 1, std::move(rest));
            prefix.push_back(v);
            dfs(std::move(next), prefix);
            prefix.pop_back();
            tried.push_back(v);
        }
    }
};

}  // namespace

Graph canonical_relabel(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 16) throw DeskScaleError("canonical form beyond 16 vertices");
    if (n <= 1) return g;
    CanonSearch search(g);
    std::vector<std::vector<int>> cells(1);
    for (int v = 0; v < n; ++v) cells[0].push_back(v);
    std::vector<int> prefix;
    search.dfs(std::move(cells), prefix);
    Graph out(n);
    for (auto [u, v] : g.edges())
        out.add_edge(search.best_label[size_t(u)], search.best_label[size_t(v)]);
    return out;
}

CanonicalForm canonical_form(const Graph& g) { return to_graph6(canonical_relabel(g)); }

namespace {

// One growth level: extend every k-vertex representative by a new vertex k
// with every admissible neighbour mask, deduplicating by canonical form.
// cap >= 0 bounds max degree (min_degree must then be 0); cap < 0 activates
// the minimum-degree feasibility prune: every vertex must still be able to
// reach min_degree using the n-k-1 vertices not yet added.
std::set<std::string> grow_level(const std::vector<Graph>& reps, int n,
                                 int k, int min_degree, int cap, int jobs) {
    const int remaining_after = n - (k + 1);
    std::size_t nchunks =
        std::min<std::size_t>(size_t(default_jobs(jobs)), std::max<std::size_t>(reps.size(), 1));
    std::vector<std::set<std::string>> chunk_out(nchunks);
    parallel_chunks(reps.size(), int(nchunks), [&](std::size_t c, std::size_t lo,
                                                   std::size_t hi) {
        auto& out = chunk_out[c];
        auto emit = [&](const Graph& g, std::uint32_t mask) {
            Graph h(k + 1);
            for (auto [u, v] : g.edges()) h.add_edge(u, v);
            std::uint32_t m = mask;
            while (m) {
                int v = std::countr_zero(m);
                m &= m - 1;
                h.add_edge(v, k);
            }
            out.insert(to_graph6(canonical_relabel(h)));
        };
        for (std::size_t r = lo; r < hi; ++r) {
            const Graph& g = reps[r];
            if (cap >= 0) {
                std::vector<int> allowed;
                for (int v = 0; v < k; ++v)
                    if (g.degree(v) < cap) allowed.push_back(v);
                // Subsets of allowed of size <= cap, smallest first.
                std::function<void(std::size_t, int, std::uint32_t)> pick =
                    [&](std::size_t idx, int left, std::uint32_t acc) {
                        emit(g, acc);
                        if (left == 0) return;
                        for (std::size_t j = idx; j < allowed.size(); ++j)
                            pick(j + 1, left - 1,
                                 acc | (std::uint32_t(1) << allowed[j]));
                    };
                pick(0, cap, 0);
            } else {
                const int need = min_degree - remaining_after;
                std::uint32_t required = 0;
                bool dead = false;
                for (int v = 0; v < k && !dead; ++v) {
                    int d = g.degree(v);
                    if (d + 1 < need) dead = true;
                    else if (d < need) required |= std::uint32_t(1) << v;
                }
                if (dead) continue;
                const std::uint32_t free_mask =
                    ((k == 32 ? 0 : (std::uint32_t(1) << k)) - 1) & ~required;
                std::uint32_t s = free_mask;
                for (;;) {
                    std::uint32_t mask = required | s;
                    if (std::popcount(mask) >= need) emit(g, mask);
                    if (s == 0) break;
                    s = (s - 1) & free_mask;
                }
            }
        }
    });
    std::set<std::string> next;
    for (auto& out : chunk_out) next.merge(out);
    return next;
}

std::vector<Graph> grow(int n, int min_degree, int cap, int jobs) {
    std::set<std::string> level{to_graph6(Graph(1))};
    for (int k = 1; k < n; ++k) {
        std::vector<Graph> reps;
        reps.reserve(level.size());
        for (const auto& key : level) reps.push_back(from_graph6(key));
        level = grow_level(reps, n, k, min_degree, cap, jobs);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& key : level) out.push_back(from_graph6(key));
    return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, int min_degree, bool connected_only,
                                    EnumMode mode, int jobs) {
    if (n < 0) throw PreconditionError("vertex count must be nonnegative");
    if (n == 0) return {};
    if (min_degree < 0) min_degree = 0;
    if (min_degree > n - 1) return {};
    const int cap = n - 1 - min_degree;
    if (mode == EnumMode::Auto)
        mode = (cap < min_degree && n <= 14 && cap <= 4) ? EnumMode::Complement
                                                         : EnumMode::Direct;
    if (mode == EnumMode::Direct) {
        if (n > 9) throw DeskScaleError("direct graph enumeration beyond 9 vertices");
        std::vector<Graph> out;
        for (auto& g : grow(n, min_degree, -1, jobs))
            if (!connected_only || is_connected(g)) out.push_back(std::move(g));
        return out;
    }
    if (n > 14 || cap > 4)
        throw DeskScaleError("complement graph enumeration beyond cap 4 on 14 vertices");
    std::vector<Graph> out;
    for (auto& rep : grow(n, 0, cap, jobs)) {
        Graph h = complement(rep);
        if (connected_only && !is_connected(h)) continue;
        out.push_back(canonical_relabel(h));
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        return to_graph6(a) < to_graph6(b);
    });
    return out;
}

std::vector<Graph> enumerate_graphs_max_degree(int n, int cap, int jobs) {
    if (n < 0) throw PreconditionError("vertex count must be nonnegative");
    if (n == 0) return {};
    if (cap < 0) return {};
    if (n > 9 && !(n <= 14 && cap <= 4))
        throw DeskScaleError("bounded-degree enumeration beyond desk scale");
    return grow(n, 0, std::min(cap, n - 1), jobs);
}

Graph random_graph(int n, int min_degree, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("random graph needs at least one vertex");
    std::mt19937_64 rng(seed);
    double p = (double(min_degree) + 1.5) / double(n);
    double floor_p = n > 1 ? std::max(0.15, 2.0 * std::log(double(n)) / double(n)) : 0.0;
    p = std::clamp(p, floor_p, 0.98);
    auto coin = [&] { return double(rng() >> 11) * 0x1.0p-53 < p; };
    for (int attempt = 0; attempt < 20000; ++attempt) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin()) g.add_edge(i, j);
        if (degree_stats(g).first >= min_degree && is_connected(g)) return g;
    }
    std::ostringstream what;
    what << "n=" << n << " min_degree=" << min_degree << " seed=" << seed;
    throw SamplingExhaustedError(what.str());
}

}  // namespace treedeg
