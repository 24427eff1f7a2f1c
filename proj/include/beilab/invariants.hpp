#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beilab/bei.hpp"
#include "beilab/graph.hpp"

namespace beilab {

// One graph's invariant record. All vertex data is 1-indexed; fields that do
// not apply (bipartite doubling for non-closed labelings, domination data for
// disconnected graphs) stay empty and serialize as null.
struct InvariantReport {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    bool connected = false;
    bool closed = false;
    int v = 0;
    std::optional<int> v_at_kn;
    std::optional<int> gamma_c;
    int theta = 0;
    int ell = 0;
    std::optional<int> im_initial;
    int v_init = 0;
    std::optional<int> lf_max;
    struct Prime {
        std::vector<int> s;
        std::vector<std::vector<int>> components;
    };
    std::optional<Prime> achieving_prime;
};

InvariantReport compute_invariants(const Graph& g, VMode mode = VMode::combinatorial);

// Fixed field order: n, edges, connected, closed, v, v_at_Kn, gamma_c,
// theta, ell, im_initial, v_init, lf_max, achieving_prime.
std::string report_to_json(const InvariantReport& r);
std::string report_to_text(const InvariantReport& r);

}  // namespace beilab
