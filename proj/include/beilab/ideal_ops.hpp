#pragma once

#include <optional>

#include "beilab/groebner.hpp"

namespace beilab {

// I ∩ J through the auxiliary variable: basis of t*I + (1-t)*J with t
// greatest, keeping the t-free elements.
IdealHandle ideal_intersection(const IdealHandle& I, const IdealHandle& J);

// (I : f) = (1/f) * (I ∩ (f)). Division is exact by construction; a nonzero
// remainder signals a broken intersection and throws logic_error.
IdealHandle colon_by_poly(const IdealHandle& I, const MultiPoly& f);

// (I : P) = ∩ over generators of P of (I : p).
IdealHandle colon_by_ideal(const IdealHandle& I, const IdealHandle& P);

// α(J/I) for homogeneous I ⊆ J: least degree of an element of J outside I,
// 0 when J = I. Containment and homogeneity are checked.
int alpha_quotient(const IdealHandle& J, const IdealHandle& I);

// Least d <= max_degree admitting a nonzero degree-d form f (computed over
// the standard monomials mod I) with f * p ∈ I for every generator p of P.
// This is α((I:P)/I) when it is <= max_degree; absent otherwise.
std::optional<int> v_local_linear(const IdealHandle& I, const IdealHandle& P, int max_degree);

// Degree-d monomials outside the leading-term ideal of I, descending.
std::vector<Monomial> standard_monomials(const IdealHandle& I, int degree);

// Single-degree probe backing v_local_linear; exposed for the sweeps that
// scan degrees across several primes at once. The second form reuses a
// precomputed standard-monomial list for I at that degree.
bool v_witness_at_degree(const IdealHandle& I, const IdealHandle& P, int degree);
bool v_witness_at_degree(const IdealHandle& I, const IdealHandle& P,
                         const std::vector<Monomial>& std_monos);

}  // namespace beilab
