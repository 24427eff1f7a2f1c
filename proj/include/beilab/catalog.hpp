#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beilab/graph.hpp"

namespace beilab {

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);      // center 1
Graph complete_graph(int n);

// Worked examples shipped with the tool: a closed 6-vertex graph, a closed
// 8-vertex graph made of two triangle blobs joined by a bridge, a non-closed
// 6-vertex wheel-like graph, and a 10-vertex tree.
Graph closed6_example();
Graph closed8_example();
Graph nonclosed6_example();
Graph tree10_example();

// Expected invariant values for the worked examples (exact integers).
struct ExampleExpectation {
    std::string name;
    Graph graph;
    std::optional<int> v;
    std::optional<int> v_at_kn;
    std::optional<int> gamma_c;
    std::optional<int> theta;
    std::optional<int> ell;
    std::optional<int> v_init;
    std::optional<int> lf_max;
    std::optional<int> reg_closed;
    std::optional<bool> closed;
};
std::vector<ExampleExpectation> worked_examples();

// The labeled 5-vertex census: all 21 connected graphs with the printed
// (v, v_init, reg) triples. `ambiguous` marks the one drawing whose labels
// collide; its transcription is best-effort and excluded from hard
// assertions. reg is recorded but not recomputed (resolution-free scope).
struct TableEntry {
    std::string name;
    std::vector<std::pair<int, int>> edges;  // 1-indexed
    int v = 0;
    int v_init = 0;
    int reg = 0;
    bool ambiguous = false;
};
const std::vector<TableEntry>& five_vertex_table();

}  // namespace beilab
