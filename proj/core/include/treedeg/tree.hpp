#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treedeg/graph.hpp"

namespace treedeg {

// Validated tree (connected, n-1 edges) with its longest path cached.
// Among all longest paths the lexicographically smallest vertex sequence is
// kept, considering both orientations, so downstream labellings are stable.
class Tree {
public:
    explicit Tree(Graph g);

    const Graph& graph() const { return g_; }
    int vertex_count() const { return g_.vertex_count(); }
    int degree(int v) const { return g_.degree(v); }
    int max_degree() const { return max_degree_; }
    const VertexSet& neighbors(int v) const { return g_.neighbors(v); }
    const Path& longest_path() const { return longest_path_; }

    bool operator==(const Tree& o) const { return g_ == o.g_; }

private:
    Graph g_;
    Path longest_path_;
    int max_degree_ = 0;
};

// Vertex ordering where every vertex after the first has exactly one earlier
// neighbor. order[j] is the j-th vertex; parent_pos[j] indexes into order
// (parent_pos[0] == -1).
struct ConventionalLabelling {
    std::vector<int> order;
    std::vector<int> parent_pos;
};

// Direct scan of the definition, independent of how the labelling was built.
bool is_conventional(const Tree& t, const ConventionalLabelling& lab);

// BFS from root, tie-break ascending vertex index.
ConventionalLabelling conventional_labelling_bfs(const Tree& t, int root);

// Spine-first labelling used by the embedding strategy: the longest path's
// interior comes first, off-path vertices follow by distance to the path,
// and the two path endpoints are labelled last. Trees whose longest path has
// 4 vertices (double stars) instead put two same-parent leaves last.
// Longest path with 3 vertices means a star: StarNotSupportedError.
ConventionalLabelling proof_labelling(const Tree& t);

// Three-vertex spine a-b-c with p leaves on a, q leaves on c and deg(b)=2.
struct TpqShape {
    int p, q;
    bool operator==(const TpqShape&) const = default;
};

// Canonical numbering: spine 0,1,2, then the p leaves of 0, then the q leaves
// of 2. Requires p,q >= 1 (DegenerateShapeError otherwise).
Tree make_tpq(int p, int q);

// Shape (min,max) if the tree is some T(p,q); None otherwise.
std::optional<TpqShape> recognize_tpq(const Tree& t);

// T(1, n-4) is the shape singled out by the balanced-multipartite hosts.
bool is_t1_nminus4(const Tree& t);

Tree prufer_decode(std::span<const int> seq);  // tree on seq.size()+2 vertices
std::vector<int> prufer_encode(const Tree& t);

// Rooted-at-center AHU string; complete isomorphism invariant for trees.
std::string ahu_canonical_string(const Tree& t);

std::vector<int> tree_centers(const Tree& t);

// One representative per isomorphism class, ascending AHU order.
// max_degree < 0 means unbounded. n is capped at 12 (DeskScaleError above).
std::vector<Tree> enumerate_trees(int n, int max_degree = -1);

// "n" then n-1 lines "parent(i)" for i = 1..n-1, rooted at vertex 0.
std::string to_parent_array(const Tree& t);
Tree from_parent_array(std::string_view text);

} // namespace treedeg
