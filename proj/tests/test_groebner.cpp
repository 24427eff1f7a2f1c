#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "beilab/bei.hpp"
#include "beilab/catalog.hpp"
#include "beilab/corpus.hpp"
#include "beilab/groebner.hpp"

using namespace beilab;

TEST_CASE("normal form follows the fixed reduction strategy") {
    RingSpec ring{3, false};
    MultiPoly f12 = two_minor(ring, 0, 1);
    CHECK(normal_form(f12, std::vector<MultiPoly>{f12}).is_zero());
    // x1 y2 reduces to x2 y1 in one step
    MultiPoly m = MultiPoly::monomial(ring.vars(),
                                      var_monomial(ring, ring.x_index(0)) *
                                          var_monomial(ring, ring.y_index(1)));
    MultiPoly r = normal_form(m, std::vector<MultiPoly>{f12});
    CHECK(r.term_count() == 1);
    CHECK(r.leading().mono == var_monomial(ring, ring.x_index(1)) *
                                  var_monomial(ring, ring.y_index(0)));
    // x2 y1 is already irreducible
    CHECK(normal_form(r, std::vector<MultiPoly>{f12}) == r);
    // empty basis is the identity
    CHECK(normal_form(m, std::vector<MultiPoly>{}) == m);
}

TEST_CASE("basis of a single minor is itself") {
    Graph k2 = complete_graph(2);
    auto basis = binomial_edge_ideal(k2).gb();
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == two_minor(ring_for(k2), 0, 1));
}

TEST_CASE("path generators already form a reduced basis") {
    Graph p3 = path_graph(3);
    auto basis = binomial_edge_ideal(p3).gb();
    REQUIRE(basis.size() == 2);
    RingSpec ring = ring_for(p3);
    CHECK(basis[0] == two_minor(ring, 0, 1));
    CHECK(basis[1] == two_minor(ring, 1, 2));
    CHECK(is_groebner(binomial_edge_ideal(p3).generators()));
}

TEST_CASE("four-cycle needs more than its natural generators") {
    Graph c4 = cycle_graph(4);
    CHECK_FALSE(is_groebner(binomial_edge_ideal(c4).generators()));
    CHECK(binomial_edge_ideal(c4).gb().size() > 4);
}

TEST_CASE("single minor set is a basis") {
    RingSpec ring{2, false};
    std::vector<MultiPoly> gens{two_minor(ring, 0, 1)};
    CHECK(is_groebner(gens));
}

TEST_CASE("basis correctness properties on random graphs") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 10; ++iter) {
        Graph g = random_connected_graph(4, rng);
        IdealHandle J = binomial_edge_ideal(g);
        const auto& basis = J.gb();
        // a reduced basis passes the S-pair test and contains the generators
        CHECK(is_groebner(basis));
        for (const MultiPoly& gen : J.generators()) CHECK(J.contains(gen));
        // reduced: monic, pairwise non-dividing leading terms, reduced tails
        for (size_t i = 0; i < basis.size(); ++i) {
            CHECK(basis[i].leading().coeff == 1);
            for (size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                CHECK_FALSE(basis[j].leading().mono.divides(basis[i].leading().mono));
                for (size_t k = 1; k < basis[i].term_count(); ++k)
                    CHECK_FALSE(basis[j].leading().mono.divides(basis[i].terms()[k].mono));
            }
        }
    }
}

TEST_CASE("reduced basis is canonical under regeneration") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 8; ++iter) {
        Graph g = random_connected_graph(4, rng);
        IdealHandle J = binomial_edge_ideal(g);
        std::vector<MultiPoly> gens = J.generators();
        std::shuffle(gens.begin(), gens.end(), rng);
        // adjoin random combinations of generators
        if (gens.size() >= 2) {
            gens.push_back(gens[0] + gens[1].scaled(mpq_class(3, 2)));
            gens.push_back(gens[rng() % gens.size()].times_monomial(
                var_monomial(J.ring(), static_cast<int>(rng() % J.ring().vars()))));
        }
        IdealHandle J2(J.ring(), std::move(gens));
        CHECK(ideal_equal(J, J2));
        // mutual membership both ways
        for (const MultiPoly& p : J2.generators()) CHECK(J.contains(p));
        for (const MultiPoly& p : J.generators()) CHECK(J2.contains(p));
    }
}

TEST_CASE("zero and unit ideals behave") {
    RingSpec ring{2, false};
    IdealHandle zero(ring, {});
    CHECK(zero.is_zero_ideal());
    CHECK(normal_form(two_minor(ring, 0, 1), zero.gb()) == two_minor(ring, 0, 1));
    IdealHandle unit(ring, {MultiPoly::constant(ring.vars(), mpq_class(7))});
    CHECK(unit.is_unit_ideal());
    CHECK(unit.contains(two_minor(ring, 0, 1)));
}
