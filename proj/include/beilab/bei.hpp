#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "beilab/graph.hpp"
#include "beilab/ideal_ops.hpp"
#include "beilab/monomial_ideal.hpp"

namespace beilab {

// Associated prime P_S(G): the variables indexed by the cut set S plus the
// 2-minor ideals of the completed components of G minus S.
struct PrimeSpec {
    BitSet s;
    std::vector<BitSet> components;  // partition of [n] \ S, by smallest member
    IdealHandle ideal;
    bool minimal = false;
};

enum class VMethod { combinatorial_shortcut, linear_sweep, colon_oracle };
const char* to_string(VMethod m);

struct VNumberReport {
    int v = 0;
    std::optional<int> v_at_kn;  // connected inputs only
    std::vector<std::pair<PrimeSpec, int>> v_local;  // entries actually evaluated
    std::optional<PrimeSpec> achieving_prime;
    VMethod method = VMethod::combinatorial_shortcut;
};

enum class VMode { algebraic, combinatorial, both };

RingSpec ring_for(const Graph& g);

// One generator x_i y_j - x_j y_i per edge, in edge order.
IdealHandle binomial_edge_ideal(const Graph& g);

// All 2-minors: the ideal of the complete graph.
IdealHandle complete_graph_ideal(const RingSpec& ring);

PrimeSpec prime_PS(const Graph& g, BitSet s);

// Minimal primes via the cut-point criterion, per connected component,
// combined by the product rule. Ordered by (|S|, S) with the per-component
// enumeration nested left to right.
std::vector<PrimeSpec> minimal_primes(const Graph& g);

// v_p(J_G) = alpha((J_G : p)/J_G) for a minimal prime p: degree sweep first,
// colon+alpha oracle as fallback.
int v_local(const Graph& g, const PrimeSpec& p);

// v at the ambient determinantal prime P_∅. Combinatorial mode evaluates the
// connected-domination description; `both` cross-checks the two.
int v_local_at_Kn(const Graph& g, VMode mode);

// Sum over connected components of the per-component minimum; the P_∅ entry
// uses the domination shortcut, other primes are swept algebraically.
VNumberReport v_number(const Graph& g);

// No component reduction and no shortcut: plain sweep over the minimal
// primes of the (possibly disconnected) graph. Used to test additivity.
VNumberReport v_number_direct(const Graph& g);

// Complete multipartite v-number: 0 when every part is a singleton (the
// ideal is prime), 1 when the smallest part is a singleton, 2 otherwise.
int v_multipartite(const std::vector<int>& parts);

Graph complete_multipartite(const std::vector<int>& parts);

// The primes P_l = (x_v, y_v | v not in V_l) over the parts of size >= 2,
// in part order; together with the ambient prime they cut out J_G.
std::vector<IdealHandle> multipartite_part_primes(const std::vector<int>& parts);

// Leading terms of the reduced basis as a squarefree monomial ideal over
// x_1..x_n, y_1..y_n. Throws logic_error on a non-squarefree leading term.
SquarefreeMonomialIdeal initial_ideal(const Graph& g);

// g plus all pairs inside N(i) and all pairs inside N(j), for a non-edge.
Graph build_Ge(const Graph& g, int i, int j);

// (J_G : f_e) against the completed-graph-plus-path-monomials description.
bool colon_single_edge_check(const Graph& g, int i, int j);

// (J_G : J_Kn) = ∩ (J_G : f_e) = J_G + split monomials over minimal
// dc-members; also checks the combined set is already a Groebner basis.
bool colon_formula_check(const Graph& g);

struct ChainResult {
    int v = 0;
    int theta = 0;
    int v_init = 0;
    int ell = 0;
    bool pass = false;
};

// (v, theta, v_init, ell) with the verdict of v < theta <= v_init <= ell.
// Complete graphs return the separate (0,1,1,1) clause.
ChainResult chain_check_closed(const Graph& g);

// J_G equals the intersection of its minimal primes.
bool decomposition_check(const Graph& g);

}  // namespace beilab
