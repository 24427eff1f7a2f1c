#pragma once

#include <array>
#include <optional>
#include <vector>

#include "beilab/graph.hpp"

namespace beilab {

// Ground set plus incomparable member sets (no member contains another).
struct Clutter {
    int ground = 0;
    std::vector<BitSet> edges;
};

struct ClosednessCertificate {
    bool closed = false;
    // Violating triple i<j<k (0-indexed) with {i,k} an edge but {i,j} or
    // {j,k} missing; present when the identity labeling fails.
    std::optional<std::array<int, 3>> violation;
    // Permutation old->new making the graph closed; filled by the relabeling
    // search when one exists.
    std::optional<std::vector<int>> relabeling;
};

// Interval condition under the given labeling: for i<j<k, {i,k} in E forces
// {i,j} and {j,k} in E.
ClosednessCertificate is_closed_labeling(const Graph& g);

// Exhaustive relabeling search (n <= 10) with incremental pruning; either a
// closed labeling or a definitive "none exists".
ClosednessCertificate find_closed_labeling(const Graph& g);

// Exact clique cover number with a witness cover (color classes of an exact
// coloring of the complement).
std::pair<int, std::vector<BitSet>> theta_clique_cover(const Graph& g);

int induced_matching_number(const Graph& g);

// Edge count of the longest induced path.
int longest_induced_path(const Graph& g);

// Bipartite graph on 2n vertices with an edge {x_i, y_j} (x_i -> i,
// y_j -> n+j) per edge {i,j}, i<j. Requires a closed labeling.
Graph initial_graph(const Graph& g);

// All minimal transversals, ordered by (size, numeric value).
std::vector<BitSet> minimal_vertex_covers(const Clutter& c);

Clutter clutter_of_graph(const Graph& g);

// Smallest stable set A whose neighborhood is a minimal vertex cover.
// Requires at least one edge; isolated vertices are ignored.
int v_edge_ideal_combinatorial(const Graph& g);

// Regularity of S/J_G for closed connected graphs: the induced-path length.
int reg_closed(const Graph& g);

}  // namespace beilab
