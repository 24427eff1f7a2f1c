#include "beilab/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace beilab {

namespace {

int pair_index(int u, int v, int n) {
    // edges {u,v}, u<v, packed row-major
    int idx = 0;
    for (int a = 0; a < u; ++a) idx += n - 1 - a;
    return idx + (v - u - 1);
}

Graph graph_from_mask(int n, uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(u, v);
    return Graph::build0(n, std::move(edges));
}

}  // namespace

std::vector<Graph> labeled_connected_graphs(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("labeled_connected_graphs: need 1 <= n <= 7");
    int bits = n * (n - 1) / 2;
    std::vector<Graph> out;
    for (uint64_t mask = 0; mask < (1ull << bits); ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

uint64_t canonical_form(const Graph& g) {
    if (g.n > 8) throw std::invalid_argument("canonical_form: n <= 8 only");
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~0ull;
    do {
        uint64_t mask = 0;
        for (auto [u, v] : g.edges) {
            int a = perm[u], b = perm[v];
            if (a > b) std::swap(a, b);
            mask |= 1ull << pair_index(a, b, g.n);
        }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Graph> connected_graphs_up_to_iso(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("connected_graphs_up_to_iso: need n <= 6");
    std::set<uint64_t> seen;
    std::vector<Graph> out;
    for (Graph& g : labeled_connected_graphs(n)) {
        uint64_t canon = canonical_form(g);
        if (seen.insert(canon).second) out.push_back(graph_from_mask(n, canon));
    }
    return out;
}

Graph random_connected_graph(int n, std::mt19937_64& rng, double edge_prob) {
    std::bernoulli_distribution coin(edge_prob);
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
        Graph g = Graph::build0(n, std::move(edges));
        if (is_connected(g)) return g;
    }
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace beilab
