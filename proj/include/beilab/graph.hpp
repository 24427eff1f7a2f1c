#pragma once

#include <utility>
#include <vector>

#include "beilab/bitset.hpp"

namespace beilab {

// Simple undirected graph. Vertices are 0-indexed internally; every external
// surface (files, reports, witnesses) is 1-indexed.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique
    std::vector<BitSet> adj;

    // edge_list uses 1-indexed endpoints, any order, duplicates allowed.
    // Throws input_error on loops or out-of-range endpoints.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edge_list);

    // 0-indexed endpoints; same validation otherwise.
    static Graph build0(int n, std::vector<std::pair<int, int>> edge_list);

    bool has_edge(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return adj[v].count(); }
    int max_degree() const;
    BitSet vertices() const { return BitSet::first_n(n); }
    bool is_complete() const;
    int edge_count() const { return static_cast<int>(edges.size()); }
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for vertices outside the set
    std::vector<int> new_to_old;
};

// Partition of {0..n-1} into maximal connected sets, ordered by smallest
// member. Isolated vertices are singleton components.
std::vector<BitSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, BitSet s);

// True iff removing v strictly increases the number of connected components.
bool is_cut_point(const Graph& g, int v);

// Union of neighbors of members of s (may intersect s).
BitSet neighborhood(const Graph& g, BitSet s);

// All simple paths from i to j as full vertex sequences, in lexicographic
// order. Empty when i and j are disconnected. Requires i != j.
std::vector<std::vector<int>> simple_paths_between(const Graph& g, int i, int j);

Graph complement(const Graph& g);

// Relabeled copy: vertex v becomes perm[v].
Graph permuted(const Graph& g, const std::vector<int>& perm);

}  // namespace beilab
