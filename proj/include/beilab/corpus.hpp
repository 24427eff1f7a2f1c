#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "beilab/graph.hpp"

namespace beilab {

// Every connected labeled graph on n vertices (n <= 6 kept cheap; n = 7 is
// two million graphs and still works when callers really want it).
std::vector<Graph> labeled_connected_graphs(int n);

// One representative per isomorphism class of connected graphs, n <= 6
// (canonical form by brute-force permutation minimum).
std::vector<Graph> connected_graphs_up_to_iso(int n);

// Edge-mask canonical form (minimum over all relabelings), n <= 8.
uint64_t canonical_form(const Graph& g);

Graph random_connected_graph(int n, std::mt19937_64& rng, double edge_prob = 0.5);

std::vector<int> random_permutation(int n, std::mt19937_64& rng);

}  // namespace beilab
