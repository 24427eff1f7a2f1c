#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "beilab/catalog.hpp"
#include "beilab/corpus.hpp"
#include "beilab/monomial_ideal.hpp"

using namespace beilab;

TEST_CASE("edge ideal of a single edge") {
    SquarefreeMonomialIdeal ideal = SquarefreeMonomialIdeal::edge_ideal(complete_graph(2));
    CHECK(v_monomial(ideal) == 1);
    CHECK(v_monomial_at_cover(ideal, BitSet::single(0)) == 1);
}

TEST_CASE("zero ideal is rejected") {
    SquarefreeMonomialIdeal zero;
    zero.clutter.ground = 3;
    CHECK_THROWS_AS(v_monomial(zero), std::invalid_argument);
}

TEST_CASE("paths and cycles") {
    CHECK(v_monomial(SquarefreeMonomialIdeal::edge_ideal(path_graph(4))) == 1);
    CHECK(v_monomial(SquarefreeMonomialIdeal::edge_ideal(cycle_graph(5))) == 2);
}

TEST_CASE("both routes agree on small connected graphs") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : connected_graphs_up_to_iso(n)) {
            if (g.edge_count() == 0) continue;
            CHECK_NOTHROW(v_edge_ideal_both_routes(g));
        }
    std::mt19937_64 rng(71);
    for (int iter = 0; iter < 20; ++iter)
        CHECK_NOTHROW(v_edge_ideal_both_routes(random_connected_graph(6, rng)));
}

TEST_CASE("every generator sits inside every cover prime") {
    Graph g = cycle_graph(6);
    SquarefreeMonomialIdeal ideal = SquarefreeMonomialIdeal::edge_ideal(g);
    for (BitSet cover : minimal_vertex_covers(ideal.clutter))
        for (BitSet gen : ideal.clutter.edges) CHECK(gen.intersects(cover));
}

TEST_CASE("v is at least one for quadratic-generated non-primes") {
    std::mt19937_64 rng(73);
    for (int iter = 0; iter < 15; ++iter) {
        Graph g = random_connected_graph(6, rng);
        if (g.edge_count() == 0) continue;
        CHECK(v_monomial(SquarefreeMonomialIdeal::edge_ideal(g)) >= 1);
    }
}
