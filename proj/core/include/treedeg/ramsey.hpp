#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "treedeg/embedding.hpp"
#include "treedeg/graph.hpp"
#include "treedeg/tree.hpp"

namespace treedeg {

// Red blocks of a partition coloring: the red graph is a disjoint union of
// blocks, blue is its complement inside K_N.
struct CompleteBlock {
    int size;
};
struct BipartiteBlock {
    int half;  // K_{half,half}
};
struct MultipartiteBlock {
    int parts;
    int part_size;
};
using RedBlock = std::variant<CompleteBlock, BipartiteBlock, MultipartiteBlock>;

struct TwoColoring {
    int n = 0;
    Graph red;  // on n vertices; blue is the complement
};

// counts may be zero (block skipped); negative counts or nonpositive block
// dimensions are rejected.
TwoColoring build_partition_coloring(std::span<const std::pair<RedBlock, int>> specs);

struct ColoringReport {
    bool has_red_tree = false;
    std::optional<Embedding> red_tree_witness;
    int max_blue_degree = 0;  // n-1 minus the minimum red degree
    bool is_valid_lower_witness = false;
};

// A blue star K_{1,m} exists iff max_blue_degree >= m; a valid lower witness
// has neither that star nor a red copy of t. Trees larger than n trivially
// never appear red.
ColoringReport verify_coloring(const TwoColoring& c, const Tree& t, int m);

struct UpperCertificate {
    std::size_t classes_checked = 0;   // red candidates at the certified value
    std::uint64_t class_list_hash = 0; // FNV-1a over their canonical forms in order
};

struct ExactRamsey {
    int value = 0;
    TwoColoring lower_witness;  // on value-1 vertices
    UpperCertificate certificate;
};

// R(t, K_{1,m}): a coloring of K_N avoids a blue K_{1,m} iff the red graph
// has min degree >= N-m, so N is an upper bound iff every such red graph
// contains t. Candidates come from enumerate_graphs up to isomorphism and
// are checked in parallel with lowest-index aggregation; the sweep starts at
// max(n, m+1) since smaller N always admit a trivial witness. Returns
// nullopt when no value at most n_cap is certified.
std::optional<ExactRamsey> exact_ramsey(const Tree& t, int m, int n_cap, int jobs = 0);

struct CampaignRow {
    int n = 0;
    int k = 0;
    int m = 0;  // k(n-1)+3
    std::string tree_id;  // canonical form of the tree
    std::string rule;
    std::optional<int> predicted;
    bool predicted_exact = false;
    std::optional<int> exact;  // absent when beyond desk scale
    bool lower_witness_valid = false;
    std::string note;
};

// For every n in n_range, k in k_range clipped to [0, n-5], m = k(n-1)+3,
// and every tree from enumerate_trees(n, n-3): predict, verify the
// (k+1) K_{n-1} witness on m+n-4 vertices, additionally verify the block
// construction on m+n-3 vertices when the predicted value is m+n-2, and
// cross-check against exact_ramsey where that fits on the desk.
std::vector<CampaignRow> ramsey_campaign(std::pair<int, int> n_range,
                                         std::pair<int, int> k_range, int jobs = 0);

}  // namespace treedeg
