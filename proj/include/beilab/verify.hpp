#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beilab/graph.hpp"

namespace beilab {

struct CheckResult {
    std::string name;
    bool pass = false;
    long cases = 0;
    std::string detail;  // first counterexample (edge list) or a short note
    double seconds = 0;
};

struct VerifyOptions {
    std::optional<int> n_cap;          // cap for the exhaustive sweeps
    uint64_t seed = 20250809;          // randomized corpora
    std::optional<std::string> only;   // run a single named check
    bool include_chain = false;        // opt-in chain-closed check
};

std::vector<std::string> verify_check_names(bool include_optional = false);

std::vector<CheckResult> run_verify(const VerifyOptions& opts);

// Most leaves over all spanning trees, by exhaustive enumeration of
// (n-1)-edge subsets. Oracle for the domination duality.
int max_leaf_count_oracle(const Graph& g);

std::string edge_list_string(const Graph& g);

}  // namespace beilab
