#include "treedeg/embed.hpp"

#include <functional>

#include "treedeg/errors.hpp"

namespace treedeg {

namespace {

// Free host neighbor of parent_img with the fewest free neighbors of its
// own; ascending scan keeps the lowest index on ties. -1 when none.
int pick_extension(const Graph& g, const Embedding& e, int parent_img) {
    VertexSet cand = g.neighbors(parent_img);
    cand -= e.used;
    int best = -1, best_free = -1;
    for (int x = cand.first(); x >= 0; x = cand.next(x)) {
        VertexSet f = g.neighbors(x);
        f -= e.used;
        int nf = f.count();
        if (best < 0 || nf < best_free) {
            best = x;
            best_free = nf;
        }
    }
    return best;
}

}  // namespace

bool extend(const Tree& t, const Graph& g, const ConventionalLabelling& lab,
            Embedding& e, int j) {
    const int n = t.vertex_count();
    if (int(lab.order.size()) != n)
        throw PreconditionError("labelling does not fit the tree");
    if (j < 2 || j > n) throw PreconditionError("extension index out of range");
    for (int p = 0; p < j - 1; ++p)
        if (e.host_of(lab.order[size_t(p)]) == -1)
            throw PreconditionError("prefix is not fully assigned");
    const int vj = lab.order[size_t(j - 1)];
    if (e.host_of(vj) != -1) throw PreconditionError("vertex is already assigned");
    const int parent = lab.order[size_t(lab.parent_pos[size_t(j - 1)])];
    int x = pick_extension(g, e, e.host_of(parent));
    if (x < 0) return false;
    e.assign(vj, x);
    return true;
}

std::optional<Embedding> embed_greedy(const Tree& t, const Graph& g,
                                      const ConventionalLabelling& lab) {
    const int n = t.vertex_count();
    if (int(lab.order.size()) != n)
        throw PreconditionError("labelling does not fit the tree");
    if (g.vertex_count() == 0) return std::nullopt;
    Embedding e(n, g.vertex_count());
    e.assign(lab.order[0], 0);
    for (int j = 2; j <= n; ++j)
        if (!extend(t, g, lab, e, j)) return std::nullopt;
    return e;
}

namespace {

// Blocked v_j whose parent image pu has only taken neighbors: move some leaf
// w sitting on a neighbor x of pu over to another free seat at w's own
// parent, then give x to v_j.
bool repair_leaf_swap(const Tree& t, const Graph& g,
                      const ConventionalLabelling& lab, Embedding& e, int j) {
    const int vj = lab.order[size_t(j - 1)];
    const int u = lab.order[size_t(lab.parent_pos[size_t(j - 1)])];
    const int pu = e.host_of(u);
    std::vector<int> inv(size_t(g.vertex_count()), -1);
    for (std::size_t v = 0; v < e.map.size(); ++v)
        if (e.map[v] != -1) inv[size_t(e.map[v])] = int(v);
    bool done = false;
    g.neighbors(pu).for_each([&](int x) {
        if (done) return;
        int w = inv[size_t(x)];
        if (w < 0 || w == u || t.degree(w) != 1) return;
        int wp = t.neighbors(w).first();
        int y = e.host_of(wp);
        if (y < 0) return;
        VertexSet f = g.neighbors(y);
        f -= e.used;
        int z = f.first();
        if (z < 0) return;
        e.unassign(w);
        e.assign(w, z);
        e.assign(vj, x);
        done = true;
    });
    return done;
}

// Blocked v_j: reseat its parent u on another free host vertex adjacent to
// the images of all assigned tree neighbors of u, provided the new seat
// leaves v_j a free neighbor (possibly u's old seat).
bool repair_parent_reseat(const Tree& t, const Graph& g,
                          const ConventionalLabelling& lab, Embedding& e, int j) {
    const int u = lab.order[size_t(lab.parent_pos[size_t(j - 1)])];
    const int xo = e.host_of(u);
    VertexSet cand = VertexSet::full(g.vertex_count());
    t.neighbors(u).for_each([&](int w) {
        if (e.host_of(w) != -1) cand &= g.neighbors(e.host_of(w));
    });
    cand -= e.used;
    for (int xn = cand.first(); xn >= 0; xn = cand.next(xn)) {
        VertexSet f = g.neighbors(xn);
        f -= e.used;
        if (!f.any() && !g.has_edge(xn, xo)) continue;
        e.unassign(u);
        e.assign(u, xn);
        return extend(t, g, lab, e, j);
    }
    return false;
}

std::optional<Embedding> structured_attempt(const Tree& t, const Graph& g,
                                            const ConventionalLabelling& lab) {
    const int n = t.vertex_count();
    Embedding e(n, g.vertex_count());
    int start = 2;
    if (n >= 3 && g.vertex_count() >= 3 && lab.parent_pos[1] == 0 &&
        lab.parent_pos[2] == 1) {
        if (auto p3 = induced_p3(g)) {
            e.assign(lab.order[0], p3->beta);
            e.assign(lab.order[1], p3->alpha);
            e.assign(lab.order[2], p3->gamma);
            start = 4;
        }
    }
    if (e.assigned == 0) e.assign(lab.order[0], 0);
    for (int j = start; j <= n; ++j) {
        if (extend(t, g, lab, e, j)) continue;
        if (repair_leaf_swap(t, g, lab, e, j)) continue;
        if (repair_parent_reseat(t, g, lab, e, j)) continue;
        return std::nullopt;
    }
    return e;
}

// Exhaustive DFS in labelling order: v_1 anywhere, each later vertex on any
// free neighbor of its parent's image. Complete for tree patterns.
std::optional<Embedding> backtrack_embed(const Tree& t, const Graph& g,
                                         const ConventionalLabelling& lab) {
    const int n = t.vertex_count();
    const int hn = g.vertex_count();
    Embedding e(n, hn);
    std::function<bool(int)> dfs = [&](int j) -> bool {
        if (j > n) return true;
        const int v = lab.order[size_t(j - 1)];
        if (j == 1) {
            for (int x = 0; x < hn; ++x) {
                e.assign(v, x);
                if (dfs(2)) return true;
                e.unassign(v);
            }
            return false;
        }
        const int parent = lab.order[size_t(lab.parent_pos[size_t(j - 1)])];
        VertexSet cand = g.neighbors(e.host_of(parent));
        cand -= e.used;
        for (int x = cand.first(); x >= 0; x = cand.next(x)) {
            e.assign(v, x);
            if (dfs(j + 1)) return true;
            e.unassign(v);
        }
        return false;
    };
    if (dfs(1)) return e;
    return std::nullopt;
}

EmbedVerdict out_of_scope(std::string reason) {
    EmbedVerdict v;
    v.status = EmbedStatus::OutOfScope;
    v.reason = std::move(reason);
    return v;
}

}  // namespace

EmbedVerdict decide_and_embed(const Tree& t, const Graph& g) {
    const int n = t.vertex_count();
    const int hn = g.vertex_count();
    if (hn == 0) return out_of_scope("HostTooSmall");
    if (!is_connected(g)) return out_of_scope("Disconnected");
    if (hn < n) return out_of_scope("HostTooSmall");
    if (degree_stats(g).first < n - 3) return out_of_scope("MinDegreeTooSmall");
    if (t.max_degree() > n - 3) return out_of_scope("MaxDegreeTooLarge");

    if (auto tt = is_balanced_bipartite_ktt(g); tt && *tt == n - 3) {
        if (auto pq = recognize_tpq(t)) {
            EmbedVerdict v;
            v.status = EmbedStatus::ExceptionBipartite;
            v.p = pq->p;
            return v;
        }
    }
    if (auto ms = is_balanced_complete_multipartite(g)) {
        const int k = ms->parts - 1, a = ms->part_size;
        if (k >= 2 && k * a == n - 3 && is_t1_nminus4(t)) {
            EmbedVerdict v;
            v.status = EmbedStatus::ExceptionMultipartite;
            v.k = k;
            v.a = a;
            return v;
        }
    }

    const ConventionalLabelling lab = proof_labelling(t);
    if (auto e = structured_attempt(t, g, lab)) {
        if (!is_valid_embedding(t.graph(), g, *e, true))
            throw InternalContradictionError("structured embedding failed validation");
        EmbedVerdict v;
        v.status = EmbedStatus::Embeddable;
        v.witness = std::move(e);
        v.strategy = "structured";
        return v;
    }
    if (auto e = backtrack_embed(t, g, lab)) {
        if (!is_valid_embedding(t.graph(), g, *e, true))
            throw InternalContradictionError("backtracking embedding failed validation");
        EmbedVerdict v;
        v.status = EmbedStatus::Embeddable;
        v.witness = std::move(e);
        v.strategy = "backtracking";
        return v;
    }
    throw InternalContradictionError(
        "embedding search exhausted on an in-scope, non-exception pair");
}

}  // namespace treedeg
