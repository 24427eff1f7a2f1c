#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "beilab/poly.hpp"

using namespace beilab;

TEST_CASE("lex order ranks x before y and t before all") {
    RingSpec ring{3, false};
    Monomial x1 = var_monomial(ring, ring.x_index(0));
    Monomial x3 = var_monomial(ring, ring.x_index(2));
    Monomial y1 = var_monomial(ring, ring.y_index(0));
    CHECK(x1 > x3);
    CHECK(x3 > y1);
    CHECK(x1 * y1 > x1);  // higher power of the shared prefix wins

    RingSpec ext{3, true};
    Monomial t = var_monomial(ext, ext.aux_index());
    Monomial x1e = var_monomial(ext, ext.x_index(0));
    CHECK(t > x1e);
    CHECK(ext.var_name(0) == "t");
    CHECK(ext.var_name(1) == "x1");
    CHECK(ring.var_name(3) == "y1");
}

TEST_CASE("monomial arithmetic") {
    RingSpec ring{2, false};
    Monomial a = var_monomial(ring, 0) * var_monomial(ring, 0) * var_monomial(ring, 3);
    Monomial b = var_monomial(ring, 0) * var_monomial(ring, 2);
    CHECK(a.degree() == 3);
    CHECK_FALSE(b.divides(a));
    Monomial l = Monomial::lcm(a, b);
    CHECK(l.exp(0) == 2);
    CHECK(l.exp(2) == 1);
    CHECK(l.exp(3) == 1);
    CHECK(a.divides(l));
    CHECK(b.divides(l));
    CHECK((l / b).degree() == 2);
    CHECK_FALSE(a.coprime_with(b));
    CHECK(var_monomial(ring, 1).coprime_with(var_monomial(ring, 2)));
    CHECK(a.squarefree() == false);
    CHECK(b.squarefree() == true);
}

TEST_CASE("polynomial arithmetic and normalization") {
    RingSpec ring{2, false};
    MultiPoly f = two_minor(ring, 0, 1);  // x1 y2 - x2 y1
    CHECK(f.term_count() == 2);
    CHECK(f.leading().coeff == 1);
    CHECK(f.is_homogeneous());
    CHECK(f.degree() == 2);
    MultiPoly zero = f - f;
    CHECK(zero.is_zero());
    MultiPoly sq = f * f;
    CHECK(sq.term_count() == 3);  // middle terms merge
    CHECK((f + f) == f.scaled(2));
    MultiPoly shifted = f.times_monomial(var_monomial(ring, 0));
    CHECK(shifted.degree() == 3);
    // cancellation through from_terms
    MultiPoly g = MultiPoly::from_terms(
        ring.vars(), {{var_monomial(ring, 0), 1}, {var_monomial(ring, 0), -1}});
    CHECK(g.is_zero());
    MultiPoly h = MultiPoly::from_terms(ring.vars(), {{var_monomial(ring, 0), mpq_class(1, 2)},
                                                      {var_monomial(ring, 1), mpq_class(1, 3)}});
    CHECK(h.monic().leading().coeff == 1);
    CHECK(h.monic().terms()[1].coeff == mpq_class(2, 3));
}

TEST_CASE("rendering") {
    RingSpec ring{2, false};
    CHECK(two_minor(ring, 0, 1).to_string(ring) == "x1*y2 - x2*y1");
    MultiPoly c = MultiPoly::constant(ring.vars(), mpq_class(-3, 4));
    CHECK(c.to_string(ring) == "-3/4");
    MultiPoly m = MultiPoly::monomial(ring.vars(), var_monomial(ring, 0) * var_monomial(ring, 0),
                                      mpq_class(2));
    CHECK(m.to_string(ring) == "2*x1^2");
    CHECK(MultiPoly(ring.vars()).to_string(ring) == "0");
}

TEST_CASE("aux lifting round-trips") {
    RingSpec ring{2, false};
    MultiPoly f = two_minor(ring, 0, 1);
    MultiPoly lifted = lift_to_aux(ring, f);
    CHECK(lifted.nvars() == 5);
    CHECK_FALSE(uses_aux(lifted));
    CHECK(drop_aux(ring, lifted) == f);
    RingSpec ext{2, true};
    MultiPoly t_f = var_poly(ext, ext.aux_index()) * lifted;
    CHECK(uses_aux(t_f));
}
