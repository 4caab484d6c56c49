#pragma once

#include <vector>

#include "treedeg/bitset.hpp"
#include "treedeg/graph.hpp"

namespace treedeg {

// Partial injective map from pattern vertices to host vertices.
// map[u] == -1 means u is unassigned; `used` mirrors the image set.
struct Embedding {
    std::vector<int> map;
    VertexSet used;
    int assigned = 0;

    Embedding() = default;
    Embedding(int pattern_n, int host_n)
        : map(size_t(pattern_n), -1), used(host_n) {}

    int host_of(int u) const { return map[size_t(u)]; }

    void assign(int u, int x) {
        map[size_t(u)] = x;
        used.set(x);
        ++assigned;
    }

    void unassign(int u) {
        used.reset(map[size_t(u)]);
        map[size_t(u)] = -1;
        --assigned;
    }

    bool total(int pattern_n) const { return assigned == pattern_n; }
};

// Checks injectivity and that every pattern edge with both ends assigned maps
// to a host edge. With require_total also demands every vertex be assigned.
bool is_valid_embedding(const Graph& pattern, const Graph& host,
                        const Embedding& emb, bool require_total);

}  // namespace treedeg
