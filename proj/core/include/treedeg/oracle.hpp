#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treedeg/embedding.hpp"
#include "treedeg/graph.hpp"

namespace treedeg {

// Byte string shared by exactly the graphs of one isomorphism class
// (the graph6 encoding of the canonically relabeled graph).
using CanonicalForm = std::string;

// Exhaustive subgraph search: a copy of `pattern` inside `host`, not
// necessarily induced. Variable order is most-constrained-first anchored at
// a maximum-degree vertex, with degree and neighborhood pruning. Returns a
// total embedding, or nullopt only after the search space is exhausted.
// Requires |V(pattern)| <= |V(host)|.
std::optional<Embedding> subgraph_embed(const Graph& pattern, const Graph& host);

// Canonical relabeling for n <= 16: equitable refinement, then backtracking
// over the coarsest partition to the lexicographically minimal graph6
// encoding, with discovered automorphisms pruning equivalent branches.
Graph canonical_relabel(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

enum class EnumMode { Auto, Direct, Complement };

// One representative per isomorphism class of n-vertex graphs with
// delta >= min_degree (and connectivity when asked), emitted canonically
// labeled in canonical-form lexicographic order. Direct growth handles
// n <= 9; when the complement degree cap n-1-min_degree is smaller than
// min_degree the complements are enumerated instead (n <= 14, cap <= 4).
// jobs <= 0 means default_jobs(); results do not depend on jobs.
std::vector<Graph> enumerate_graphs(int n, int min_degree, bool connected_only,
                                    EnumMode mode = EnumMode::Auto, int jobs = 0);

// Same contract for the family max-degree <= cap (all such graphs).
std::vector<Graph> enumerate_graphs_max_degree(int n, int cap, int jobs = 0);

// Rejection-sampled G(n, p) conditioned on connectivity and delta >=
// min_degree; p grows with min_degree/n. Deterministic under seed. Throws
// SamplingExhaustedError after 20000 failed attempts (in particular for
// unsatisfiable parameters).
Graph random_graph(int n, int min_degree, std::uint64_t seed);

}  // namespace treedeg
