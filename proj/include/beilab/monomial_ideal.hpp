#pragma once

#include <string>
#include <vector>

#include "beilab/graph.hpp"
#include "beilab/structure.hpp"

namespace beilab {

// Squarefree monomial ideal presented by its clutter of minimal generator
// supports. Generators are pairwise non-dividing.
struct SquarefreeMonomialIdeal {
    Clutter clutter;
    std::vector<std::string> ground_names;

    static SquarefreeMonomialIdeal edge_ideal(const Graph& g);
};

// v-number through the associated primes: minimal vertex covers of the
// clutter give the primes, the colon is exponent-wise monomial arithmetic,
// and alpha is the least generator degree outside the ideal. Requires at
// least one generator.
int v_monomial(const SquarefreeMonomialIdeal& ideal);

// Local value at one cover (must be a minimal vertex cover of the clutter).
int v_monomial_at_cover(const SquarefreeMonomialIdeal& ideal, BitSet cover);

// Stable-set route and algebraic route for the edge ideal of h; asserts they
// agree when h is connected, returns the algebraic value either way.
int v_edge_ideal_both_routes(const Graph& h);

}  // namespace beilab
