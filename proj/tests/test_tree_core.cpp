#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "treedeg/graph.hpp"
#include "treedeg/tree.hpp"

using namespace treedeg;

namespace {

Tree spider_122() {
    // Center 0 with legs of 1, 2 and 2 vertices.
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(0, 4);
    g.add_edge(4, 5);
    return Tree(std::move(g));
}

Tree double_star(int left, int right) {
    Graph g(2 + left + right);
    g.add_edge(0, 1);
    int next = 2;
    for (int i = 0; i < left; ++i) g.add_edge(0, next++);
    for (int i = 0; i < right; ++i) g.add_edge(1, next++);
    return Tree(std::move(g));
}

std::vector<int> random_prufer(int n, std::mt19937_64& rng) {
    std::vector<int> seq(size_t(n - 2));
    for (auto& x : seq) x = int(rng() % std::uint64_t(n));
    return seq;
}

}  // namespace

TEST_CASE("tree construction validates shape") {
    CHECK_NOTHROW(Tree(Graph(1)));
    CHECK_NOTHROW(Tree(path_graph(2)));
    CHECK_THROWS_AS(Tree(cycle_graph(4)), NotATreeError);
    CHECK_THROWS_AS(Tree(Graph(3)), NotATreeError);
    Graph extra = path_graph(4);
    extra.add_edge(0, 3);
    CHECK_THROWS_AS(Tree(std::move(extra)), NotATreeError);
    CHECK_THROWS_AS(Tree(Graph(0)), NotATreeError);

    Tree star(star_graph(4));
    CHECK(star.max_degree() == 4);
    CHECK(star.degree(1) == 1);
}

TEST_CASE("cached longest path is the lexicographically smallest") {
    CHECK(Tree(path_graph(6)).longest_path().verts ==
          std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(Tree(star_graph(2)).longest_path().verts == std::vector<int>{1, 0, 2});
    CHECK(make_tpq(1, 2).longest_path().verts == std::vector<int>{3, 0, 1, 2, 4});

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + int(rng() % 6);
        Tree t = prufer_decode(random_prufer(n, rng));
        const Path& p = t.longest_path();
        CHECK(is_valid_path(t.graph(), p));
        CHECK(std::vector<int>(p.verts) <=
              std::vector<int>(p.verts.rbegin(), p.verts.rend()));
    }
}

TEST_CASE("bfs labelling is conventional from every root") {
    auto lab = conventional_labelling_bfs(Tree(path_graph(3)), 0);
    CHECK(lab.order == std::vector<int>{0, 1, 2});
    CHECK(lab.parent_pos == std::vector<int>{-1, 0, 1});

    auto star = conventional_labelling_bfs(Tree(star_graph(4)), 0);
    CHECK(star.order == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(star.parent_pos == std::vector<int>{-1, 0, 0, 0, 0});

    CHECK_THROWS_AS(conventional_labelling_bfs(Tree(path_graph(3)), 3),
                    PreconditionError);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + int(rng() % 8);
        Tree t = n == 2 ? Tree(path_graph(2)) : prufer_decode(random_prufer(n, rng));
        int root = int(rng() % std::uint64_t(n));
        CHECK(is_conventional(t, conventional_labelling_bfs(t, root)));
    }
}

TEST_CASE("conventional check rejects broken orderings") {
    Tree p4(path_graph(4));
    ConventionalLabelling lab{{0, 2, 1, 3}, {-1, 0, 0, 1}};
    CHECK(!is_conventional(p4, lab));
    ConventionalLabelling dup{{0, 1, 1, 3}, {-1, 0, 1, 2}};
    CHECK(!is_conventional(p4, dup));
    ConventionalLabelling ok{{1, 0, 2, 3}, {-1, 0, 0, 2}};
    CHECK(is_conventional(p4, ok));
}

TEST_CASE("spine labelling puts the long path endpoints last") {
    auto p6 = proof_labelling(Tree(path_graph(6)));
    CHECK(p6.order == std::vector<int>{1, 2, 3, 4, 0, 5});
    CHECK(p6.parent_pos == std::vector<int>{-1, 0, 1, 2, 0, 3});

    // Longest path 3-0-1-2-4 has five vertices; its endpoints come last.
    auto t12 = proof_labelling(make_tpq(1, 2));
    CHECK(t12.order == std::vector<int>{0, 1, 2, 5, 3, 4});
    CHECK(is_conventional(make_tpq(1, 2), t12));

    CHECK_THROWS_AS(proof_labelling(Tree(star_graph(5))), StarNotSupportedError);
    CHECK_THROWS_AS(proof_labelling(Tree(star_graph(2))), StarNotSupportedError);
}

TEST_CASE("four-vertex spine trees end on two same-parent leaves") {
    for (Tree t : {double_star(2, 2), double_star(1, 2), double_star(3, 1)}) {
        auto lab = proof_labelling(t);
        int n = t.vertex_count();
        CHECK(is_conventional(t, lab));
        CHECK(lab.parent_pos[size_t(n) - 1] == lab.parent_pos[size_t(n) - 2]);
        CHECK(t.degree(lab.order[size_t(n) - 1]) == 1);
        CHECK(t.degree(lab.order[size_t(n) - 2]) == 1);
    }
}

TEST_CASE("spine labelling stays conventional across shapes") {
    std::mt19937_64 rng(13);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 60; ++trial) {
        int n = 4 + int(rng() % 6);
        Tree t = prufer_decode(random_prufer(n, rng));
        if (t.longest_path().size() <= 3) continue;
        CHECK(is_conventional(t, proof_labelling(t)));
        ++done;
    }
    CHECK(done == 60);
}

TEST_CASE("three-vertex spine construction and recognition") {
    CHECK(ahu_canonical_string(make_tpq(1, 1)) ==
          ahu_canonical_string(Tree(path_graph(5))));
    CHECK(make_tpq(1, 2).vertex_count() == 6);
    CHECK(make_tpq(4, 2).vertex_count() == 9);
    CHECK_THROWS_AS(make_tpq(2, 0), DegenerateShapeError);
    CHECK_THROWS_AS(make_tpq(0, 5), DegenerateShapeError);

    CHECK(recognize_tpq(Tree(path_graph(5))) == TpqShape{1, 1});
    CHECK(!recognize_tpq(Tree(star_graph(4))));
    CHECK(!recognize_tpq(spider_122()));
    CHECK(!recognize_tpq(Tree(path_graph(6))));
    CHECK(!recognize_tpq(Tree(path_graph(4))));
    CHECK(!recognize_tpq(double_star(2, 2)));

    for (int p = 1; p <= 8; ++p)
        for (int q = 1; q <= 8; ++q) {
            auto shape = recognize_tpq(make_tpq(p, q));
            REQUIRE(shape.has_value());
            CHECK(*shape == TpqShape{std::min(p, q), std::max(p, q)});
        }
}

TEST_CASE("three-vertex spine trees have a five-vertex long path") {
    for (int p = 1; p <= 5; ++p)
        for (int q = 1; q <= 5; ++q) {
            Tree t = make_tpq(p, q);
            CHECK(t.longest_path().size() == 5);
            CHECK(t.degree(1) == 2);
        }
}

TEST_CASE("single-leaf spine shape test") {
    CHECK(is_t1_nminus4(make_tpq(1, 5)));
    CHECK(is_t1_nminus4(make_tpq(1, 3)));
    CHECK(is_t1_nminus4(Tree(path_graph(5))));
    CHECK(!is_t1_nminus4(make_tpq(2, 4)));
    CHECK(!is_t1_nminus4(Tree(path_graph(6))));
    CHECK(!is_t1_nminus4(Tree(star_graph(4))));
}

TEST_CASE("prufer codec") {
    CHECK(prufer_decode(std::vector<int>{}).graph() == path_graph(2));
    CHECK(prufer_decode(std::vector<int>{0, 0}).graph() == star_graph(3));
    CHECK(prufer_encode(Tree(star_graph(3))) == std::vector<int>{0, 0});
    CHECK(prufer_encode(Tree(path_graph(2))).empty());
    CHECK_THROWS_AS(prufer_decode(std::vector<int>{4}), PreconditionError);
    CHECK_THROWS_AS(prufer_decode(std::vector<int>{-1}), PreconditionError);
    CHECK_THROWS_AS(prufer_encode(Tree(Graph(1))), PreconditionError);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 3 + int(rng() % 8);
        auto seq = random_prufer(n, rng);
        Tree t = prufer_decode(seq);
        CHECK(t.vertex_count() == n);
        CHECK(prufer_encode(t) == seq);
        CHECK(prufer_decode(prufer_encode(t)) == t);
    }
}

TEST_CASE("center computation") {
    CHECK(tree_centers(Tree(path_graph(6))) == std::vector<int>{2, 3});
    CHECK(tree_centers(Tree(path_graph(5))) == std::vector<int>{2});
    CHECK(tree_centers(Tree(star_graph(4))) == std::vector<int>{0});
    CHECK(tree_centers(make_tpq(1, 2)) == std::vector<int>{1});
    CHECK(tree_centers(Tree(Graph(1))) == std::vector<int>{0});
}

TEST_CASE("ahu string is a full isomorphism invariant") {
    CHECK(ahu_canonical_string(spider_122()) !=
          ahu_canonical_string(make_tpq(1, 2)));
    CHECK(ahu_canonical_string(double_star(2, 2)) !=
          ahu_canonical_string(make_tpq(1, 2)));

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + int(rng() % 8);
        Tree t = prufer_decode(random_prufer(n, rng));
        auto perm = std::vector<int>(size_t(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        for (auto [u, v] : t.graph().edges())
            h.add_edge(perm[size_t(u)], perm[size_t(v)]);
        CHECK(ahu_canonical_string(Tree(std::move(h))) == ahu_canonical_string(t));
    }
}

TEST_CASE("tree enumeration counts and catalog") {
    const int counts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) {
        auto trees = enumerate_trees(n);
        CHECK(int(trees.size()) == counts[n]);
        std::set<std::string> keys;
        std::vector<std::string> order;
        for (const Tree& t : trees) {
            CHECK(t.vertex_count() == n);
            keys.insert(ahu_canonical_string(t));
            order.push_back(ahu_canonical_string(t));
        }
        CHECK(keys.size() == trees.size());
        CHECK(std::is_sorted(order.begin(), order.end()));
    }

    auto bounded = enumerate_trees(6, 3);
    REQUIRE(bounded.size() == 4);
    std::set<std::string> got;
    for (const Tree& t : bounded) {
        CHECK(t.max_degree() <= 3);
        got.insert(ahu_canonical_string(t));
    }
    std::set<std::string> want{
        ahu_canonical_string(Tree(path_graph(6))),
        ahu_canonical_string(spider_122()),
        ahu_canonical_string(double_star(2, 2)),
        ahu_canonical_string(make_tpq(1, 2)),
    };
    CHECK(got == want);

    CHECK(enumerate_trees(3, 1).empty());
    CHECK(enumerate_trees(7, 6).size() == 11);
    CHECK(enumerate_trees(7, 5).size() == 10);
    CHECK_THROWS_AS(enumerate_trees(13), DeskScaleError);
    CHECK_THROWS_AS(enumerate_trees(0), PreconditionError);
}

TEST_CASE("parent array round trips") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + int(rng() % 9);
        Tree t = n == 2 ? Tree(path_graph(2)) : prufer_decode(random_prufer(n, rng));
        CHECK(from_parent_array(to_parent_array(t)) == t);
    }
    CHECK_THROWS_AS(from_parent_array("3\n0\n"), ParseError);
    CHECK_THROWS_AS(from_parent_array("2\n5\n"), ParseError);
    CHECK_THROWS_AS(from_parent_array(""), ParseError);
}
