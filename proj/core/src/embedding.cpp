#include "treedeg/embedding.hpp"

namespace treedeg {

bool is_valid_embedding(const Graph& pattern, const Graph& host,
                        const Embedding& emb, bool require_total) {
    const int pn = pattern.vertex_count();
    if (int(emb.map.size()) != pn) return false;
    VertexSet seen(host.vertex_count());
    int assigned = 0;
    for (int u = 0; u < pn; ++u) {
        int x = emb.map[size_t(u)];
        if (x == -1) continue;
        if (x < 0 || x >= host.vertex_count()) return false;
        if (seen.test(x)) return false;
        seen.set(x);
        ++assigned;
    }
    if (require_total && assigned != pn) return false;
    for (auto [u, v] : pattern.edges()) {
        int x = emb.map[size_t(u)], y = emb.map[size_t(v)];
        if (x == -1 || y == -1) continue;
        if (!host.has_edge(x, y)) return false;
    }
    return true;
}

}  // namespace treedeg
