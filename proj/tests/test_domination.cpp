#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "beilab/catalog.hpp"
#include "beilab/corpus.hpp"
#include "beilab/domination.hpp"
#include "beilab/verify.hpp"

using namespace beilab;

namespace {

BitSet from_vertices(std::initializer_list<int> verts) {  // 1-indexed
    BitSet b;
    for (int v : verts) b.set(v - 1);
    return b;
}

int brute_dc_min(const Graph& g) {
    int best = g.n + 1;
    for (uint64_t mask = 0; mask < (1ull << g.n); ++mask) {
        BitSet b{mask, 0};
        if (b.count() < best && dc_membership(g, b)) best = b.count();
    }
    return best;
}

}  // namespace

TEST_CASE("connected dominating sets") {
    CHECK(is_connected_dominating(star_graph(5), from_vertices({1})));
    CHECK_FALSE(is_connected_dominating(cycle_graph(5), from_vertices({1, 2})));
    CHECK(is_connected_dominating(tree10_example(), from_vertices({2, 3, 4, 5, 7, 9})));
    CHECK_FALSE(is_connected_dominating(cycle_graph(5), BitSet{}));
    Graph disconnected = Graph::build(4, {{1, 2}, {3, 4}});
    CHECK_THROWS_AS(is_connected_dominating(disconnected, from_vertices({1})),
                    std::invalid_argument);
}

TEST_CASE("dc membership by restricted paths") {
    CHECK(dc_membership(complete_graph(4), BitSet{}));
    CHECK(dc_membership(cycle_graph(5), from_vertices({2, 3, 4})));
    CHECK_FALSE(dc_membership(cycle_graph(5), from_vertices({2, 3})));
    Graph disconnected = Graph::build(4, {{1, 2}, {3, 4}});
    CHECK_THROWS_AS(dc_membership(disconnected, BitSet{}), std::invalid_argument);
}

TEST_CASE("gamma_c on the worked graphs") {
    CHECK(gamma_c(complete_graph(5)).gamma_c == 1);
    CHECK(gamma_c(complete_graph(5)).witness == BitSet::single(0));
    CHECK(gamma_c(cycle_graph(6)).gamma_c == 4);
    CHECK(gamma_c(tree10_example()).gamma_c == 6);
    CHECK(gamma_c(path_graph(3)).gamma_c == 1);
    CHECK(gamma_c(Graph::build(1, {})).gamma_c == 1);
    CHECK(gamma_c(nonclosed6_example()).gamma_c == 3);
}

TEST_CASE("dc_min matches the convention split") {
    CHECK(dc_min(complete_graph(4)) == 0);
    CHECK(dc_min(cycle_graph(6)) == 4);
    CHECK(dc_min(path_graph(3)) == 1);
    CHECK(dc_min(complete_graph(2)) == 0);
}

TEST_CASE("max leaf spanning trees") {
    auto [st_star, lf_star] = max_leaf_spanning_tree(star_graph(5));
    CHECK(lf_star == 4);
    CHECK(st_star.size() == 4);
    auto [st_c6, lf_c6] = max_leaf_spanning_tree(cycle_graph(6));
    CHECK(lf_c6 == 2);
    auto [st_tree, lf_tree] = max_leaf_spanning_tree(tree10_example());
    CHECK(lf_tree == 4);
    // a tree is its own spanning tree
    std::vector<std::pair<int, int>> sorted = st_tree;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == tree10_example().edges);
}

TEST_CASE("dc_min equals gamma_c off the complete graphs") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : connected_graphs_up_to_iso(n)) {
            int dc = dc_min(g);
            int gam = gamma_c(g).gamma_c;
            if (g.is_complete()) {
                CHECK(dc == 0);
                CHECK(gam == 1);
            } else {
                CHECK(dc == gam);
            }
        }
}

TEST_CASE("dc_min against the exhaustive subset oracle") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : labeled_connected_graphs(n)) CHECK(dc_min(g) == brute_dc_min(g));
}

TEST_CASE("duality against the spanning-tree oracle") {
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : connected_graphs_up_to_iso(n))
            CHECK(gamma_c(g).gamma_c == g.n - max_leaf_count_oracle(g));
    // two-vertex special case: both endpoints count as leaves
    CHECK(max_leaf_count_oracle(complete_graph(2)) == 2);
    CHECK(gamma_c(complete_graph(2)).gamma_c == 1);
}

TEST_CASE("adding edges never increases gamma_c") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 25; ++iter) {
        Graph g = random_connected_graph(6, rng);
        int before = gamma_c(g).gamma_c;
        std::vector<std::pair<int, int>> missing;
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v)
                if (!g.has_edge(u, v)) missing.emplace_back(u, v);
        if (missing.empty()) continue;
        auto extra = missing[rng() % missing.size()];
        std::vector<std::pair<int, int>> edges = g.edges;
        edges.push_back(extra);
        CHECK(gamma_c(Graph::build0(g.n, edges)).gamma_c <= before);
    }
}
