#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <utility>
#include <vector>

#include "treedeg/graph.hpp"
#include "treedeg/graph_io.hpp"
#include "treedeg/numerics.hpp"
#include "treedeg/oracle.hpp"
#include "treedeg/ramsey.hpp"
#include "treedeg/tree.hpp"

using namespace treedeg;

namespace {

Tree spider_122() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(0, 4);
    g.add_edge(4, 5);
    return Tree(std::move(g));
}

std::uint64_t fnv_over_forms(const std::vector<Graph>& reps) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const Graph& g : reps) {
        std::string line = to_graph6(g) + "\n";
        for (unsigned char c : line) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

}  // namespace

TEST_CASE("partition colorings assemble block by block") {
    std::vector<std::pair<RedBlock, int>> one{{CompleteBlock{5}, 1}};
    TwoColoring c = build_partition_coloring(one);
    CHECK(c.n == 5);
    CHECK(c.red == complete_graph(5));

    std::vector<std::pair<RedBlock, int>> bip{{BipartiteBlock{3}, 1}};
    TwoColoring b = build_partition_coloring(bip);
    CHECK(b.n == 6);
    CHECK(b.red == complete_bipartite(3, 3));

    std::vector<std::pair<RedBlock, int>> multi{{MultipartiteBlock{3, 3}, 1}};
    CHECK(build_partition_coloring(multi).red == complete_multipartite(3, 3));

    std::vector<std::pair<RedBlock, int>> two{{CompleteBlock{5}, 1},
                                              {CompleteBlock{4}, 1}};
    TwoColoring u = build_partition_coloring(two);
    CHECK(u.n == 9);
    CHECK(u.red.edge_count() == 10 + 6);
    CHECK(!u.red.has_edge(0, 5));

    std::vector<std::pair<RedBlock, int>> rep{{CompleteBlock{5}, 3}};
    CHECK(build_partition_coloring(rep).n == 15);

    std::vector<std::pair<RedBlock, int>> zero{{CompleteBlock{5}, 0}};
    CHECK(build_partition_coloring(zero).n == 0);

    std::vector<std::pair<RedBlock, int>> neg{{CompleteBlock{5}, -1}};
    CHECK_THROWS_AS(build_partition_coloring(neg), PreconditionError);
    std::vector<std::pair<RedBlock, int>> bad{{CompleteBlock{0}, 1}};
    CHECK_THROWS_AS(build_partition_coloring(bad), PreconditionError);
}

TEST_CASE("coloring verification separates the two failure modes") {
    Tree t12 = make_tpq(1, 2);

    // Red K_5 on five vertices: no room for a six-vertex tree, blue empty.
    TwoColoring k5{5, complete_graph(5)};
    auto r1 = verify_coloring(k5, t12, 3);
    CHECK(!r1.has_red_tree);
    CHECK(r1.max_blue_degree == 0);
    CHECK(r1.is_valid_lower_witness);

    // Red K_{3,3}: the exceptional host, still no red T(1,2).
    TwoColoring k33{6, complete_bipartite(3, 3)};
    auto r2 = verify_coloring(k33, t12, 3);
    CHECK(!r2.has_red_tree);
    CHECK(r2.max_blue_degree == 2);
    CHECK(r2.is_valid_lower_witness);

    // Red K_6 contains every six-vertex tree.
    TwoColoring k6{6, complete_graph(6)};
    auto r3 = verify_coloring(k6, Tree(path_graph(6)), 3);
    CHECK(r3.has_red_tree);
    REQUIRE(r3.red_tree_witness.has_value());
    CHECK(is_valid_embedding(path_graph(6), k6.red, *r3.red_tree_witness, true));
    CHECK(!r3.is_valid_lower_witness);

    // Sparse red graph: the blue star shows up instead.
    TwoColoring sparse{6, path_graph(6)};
    auto r4 = verify_coloring(sparse, t12, 3);
    CHECK(r4.max_blue_degree == 4);
    CHECK(!r4.is_valid_lower_witness);

    CHECK_THROWS_AS(verify_coloring(TwoColoring{0, Graph(0)}, t12, 3),
                    PreconditionError);
    CHECK_THROWS_AS(verify_coloring(TwoColoring{4, Graph(5)}, t12, 3),
                    PreconditionError);
}

TEST_CASE("blue degree identity holds on samples") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph red = random_graph(7, 1, seed);
        TwoColoring c{7, red};
        auto rep = verify_coloring(c, Tree(path_graph(5)), 3);
        CHECK(rep.max_blue_degree == 6 - degree_stats(red).first);
    }
}

TEST_CASE("exact sweep on the pinned desk instances") {
    auto general = exact_ramsey(spider_122(), 3, 10);
    REQUIRE(general.has_value());
    CHECK(general->value == 6);

    auto single = exact_ramsey(make_tpq(1, 2), 3, 10);
    REQUIRE(single.has_value());
    CHECK(single->value == 7);
    CHECK(single->lower_witness.n == 6);
    auto rep = verify_coloring(single->lower_witness, make_tpq(1, 2), 3);
    CHECK(rep.is_valid_lower_witness);

    auto swapped = exact_ramsey(make_tpq(2, 1), 3, 10);
    REQUIRE(swapped.has_value());
    CHECK(swapped->value == 7);

    // Certificate: red candidates at the certified value, hashed in order.
    auto reps = enumerate_graphs(7, 7 - 3, false);
    CHECK(single->certificate.classes_checked == reps.size());
    CHECK(single->certificate.classes_checked == 29);
    CHECK(single->certificate.class_list_hash == fnv_over_forms(reps));
}

TEST_CASE("exact sweep respects its cap and scale limits") {
    CHECK(!exact_ramsey(make_tpq(1, 2), 3, 6).has_value());
    CHECK_THROWS_AS(exact_ramsey(make_tpq(1, 2), 3, 15), DeskScaleError);
    CHECK_THROWS_AS(exact_ramsey(make_tpq(1, 2), 6, 10), DeskScaleError);
    CHECK_THROWS_AS(exact_ramsey(make_tpq(1, 2), 0, 10), PreconditionError);
    CHECK_THROWS_AS(exact_ramsey(Tree(Graph(1)), 3, 10), PreconditionError);
}

TEST_CASE("exact value grows with the star order") {
    Tree p5(path_graph(5));
    int prev = 0;
    for (int m = 1; m <= 4; ++m) {
        auto r = exact_ramsey(p5, m, 12);
        REQUIRE(r.has_value());
        CHECK(r->value >= prev);
        prev = r->value;
        auto rep = verify_coloring(r->lower_witness, p5, m);
        CHECK(rep.is_valid_lower_witness);
        CHECK(r->lower_witness.n == r->value - 1);
    }
}

TEST_CASE("tiny instances stay in bounds") {
    auto r = exact_ramsey(Tree(path_graph(2)), 1, 5);
    REQUIRE(r.has_value());
    CHECK(r->value == 2);
    CHECK(r->lower_witness.n == 1);
}

TEST_CASE("campaign rows verify both constructions") {
    auto rows = ramsey_campaign({6, 6}, {0, 0});
    REQUIRE(rows.size() == 4);
    int stepped = 0;
    for (const CampaignRow& row : rows) {
        CHECK(row.n == 6);
        CHECK(row.k == 0);
        CHECK(row.m == 3);
        CHECK(row.lower_witness_valid);
        CHECK(row.predicted_exact);
        REQUIRE(row.predicted.has_value());
        REQUIRE(row.exact.has_value());
        CHECK(*row.exact == *row.predicted);
        if (*row.predicted == 7) ++stepped;
    }
    CHECK(stepped == 1);

    auto deeper = ramsey_campaign({6, 6}, {1, 1});
    REQUIRE(deeper.size() == 4);
    for (const CampaignRow& row : deeper) {
        CHECK(row.m == 8);
        CHECK(row.lower_witness_valid);
        CHECK(!row.exact.has_value());
        CHECK(row.note.find("construction-verified only") != std::string::npos);
    }

    CHECK_THROWS_AS(ramsey_campaign({4, 5}, {0, 0}), PreconditionError);
}

TEST_CASE("campaign notes flag the pinned exact clause") {
    auto rows = ramsey_campaign({7, 7}, {0, 0});
    REQUIRE(rows.size() == 9);
    bool saw_both_ends = false;
    for (const CampaignRow& row : rows) {
        CHECK(row.lower_witness_valid);
        if (row.rule == "both_ends_exact") {
            saw_both_ends = true;
            CHECK(row.note.find("exact clause pinned to p>=2 shapes") !=
                  std::string::npos);
        }
    }
    CHECK(saw_both_ends);
}
