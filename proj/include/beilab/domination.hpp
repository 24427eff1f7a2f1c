#pragma once

#include <utility>
#include <vector>

#include "beilab/graph.hpp"

namespace beilab {

struct DominationResult {
    int gamma_c = 0;
    BitSet witness;  // minimum connected dominating set, lexicographically least
    int lf_max = 0;  // n - gamma_c
    std::vector<std::pair<int, int>> tree;  // spanning tree realizing lf_max, 0-indexed
};

// b is nonempty, induces a connected subgraph, and dominates everything
// outside it. Requires g connected.
bool is_connected_dominating(const Graph& g, BitSet b);

// b joins every non-edge {i,j} by a path whose internal vertices lie in b.
// The empty set qualifies exactly for complete graphs. Requires g connected.
bool dc_membership(const Graph& g, BitSet b);

// Smallest |B| with dc_membership(g, B): 0 for complete g, gamma_c otherwise.
int dc_min(const Graph& g);

// Exact connected domination number with witness and the max-leaf spanning
// tree dual. gamma_c(K_n) = 1 by the nonempty-set convention.
DominationResult gamma_c(const Graph& g);

// Spanning tree maximizing the leaf count, built from a minimum CDS witness.
// Returns (edges, lf_max) with lf_max = n - gamma_c. Requires n >= 2.
std::pair<std::vector<std::pair<int, int>>, int> max_leaf_spanning_tree(const Graph& g);

}  // namespace beilab
