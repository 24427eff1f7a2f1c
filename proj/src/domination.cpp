#include "beilab/domination.hpp"

#include <stdexcept>

#include "beilab/errors.hpp"

namespace beilab {

namespace {

void require_connected(const Graph& g, const char* op) {
    if (g.n == 0) throw std::invalid_argument(std::string(op) + ": empty graph");
    if (!is_connected(g)) throw std::invalid_argument(std::string(op) + ": graph is disconnected");
}

BitSet closed_neighborhood(const Graph& g, BitSet b) {
    return b | neighborhood(g, b);
}

bool induced_connected(const Graph& g, BitSet b) {
    if (b.none()) return false;
    BitSet comp = BitSet::single(b.first());
    BitSet frontier = comp;
    while (frontier.any()) {
        BitSet next;
        frontier.for_each([&](int v) { next |= g.adj[v] & b; });
        frontier = next - comp;
        comp |= next;
    }
    return comp == b;
}

// Path from i to j with all internal vertices in b (restricted BFS).
bool joined_through(const Graph& g, BitSet b, int i, int j) {
    BitSet allowed = b;
    allowed.set(j);
    BitSet reached = g.adj[i] & allowed;
    BitSet frontier = reached;
    while (frontier.any()) {
        if (reached.test(j)) return true;
        BitSet next;
        frontier.for_each([&](int v) {
            if (v != j) next |= g.adj[v] & allowed;
        });
        frontier = next - reached;
        reached |= next;
    }
    return reached.test(j);
}

// Lexicographically first k-subset of {0..n-1} accepted by `ok`, enumerated
// in ascending combination order. Feasibility prune: the chosen prefix plus
// all remaining vertices must still dominate the graph.
template <typename Pred>
bool first_k_subset(const Graph& g, int k, BitSet& chosen, int next_candidate, Pred&& ok) {
    int have = chosen.count();
    if (have == k) return ok(chosen);
    int remaining_slots = k - have;
    if (g.n - next_candidate < remaining_slots) return false;
    BitSet rest = BitSet::first_n(g.n) - BitSet::first_n(next_candidate);
    if (closed_neighborhood(g, chosen | rest) != g.vertices()) return false;
    for (int v = next_candidate; v <= g.n - remaining_slots; ++v) {
        chosen.set(v);
        if (first_k_subset(g, k, chosen, v + 1, ok)) return true;
        chosen.reset(v);
    }
    return false;
}

// Spanning tree with b as internal backbone: BFS tree inside b, everything
// else attached as a leaf to its smallest neighbor in b.
std::pair<std::vector<std::pair<int, int>>, int> tree_from_witness(const Graph& g, BitSet b) {
    std::vector<std::pair<int, int>> tree;
    BitSet in_tree = BitSet::single(b.first());
    std::vector<int> queue{b.first()};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        (g.adj[v] & (b - in_tree)).for_each([&](int u) {
            in_tree.set(u);
            tree.emplace_back(std::min(v, u), std::max(v, u));
            queue.push_back(u);
        });
    }
    (g.vertices() - b).for_each([&](int v) {
        int p = (g.adj[v] & b).first();
        tree.emplace_back(std::min(v, p), std::max(v, p));
    });
    return {std::move(tree), g.n - b.count()};
}

}  // namespace

bool is_connected_dominating(const Graph& g, BitSet b) {
    require_connected(g, "is_connected_dominating");
    if (b.none()) return false;
    if (!b.subset_of(g.vertices())) return false;
    if (!induced_connected(g, b)) return false;
    return closed_neighborhood(g, b) == g.vertices();
}

bool dc_membership(const Graph& g, BitSet b) {
    require_connected(g, "dc_membership");
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            if (g.has_edge(i, j)) continue;
            if (!joined_through(g, b, i, j)) return false;
        }
    return true;
}

int dc_min(const Graph& g) {
    require_connected(g, "dc_min");
    for (int k = 0; k <= g.n; ++k) {
        BitSet chosen;
        bool found = first_k_subset(g, k, chosen, 0, [&](BitSet b) {
            // dc-members need not dominate, but minimum ones do (they are
            // exactly the minimum CDSs for non-complete g); the domination
            // prune inside first_k_subset is therefore only a heuristic and
            // must not reject k=0 on complete graphs, where it holds anyway.
            return dc_membership(g, b);
        });
        if (found) return k;
    }
    throw std::logic_error("dc_min: no member found");  // unreachable: V itself qualifies
}

DominationResult gamma_c(const Graph& g) {
    require_connected(g, "gamma_c");
    DominationResult res;
    if (g.n == 1) {
        res.gamma_c = 1;
        res.witness = BitSet::single(0);
        res.lf_max = 0;
        return res;
    }
    int delta = g.max_degree();
    int k0 = 1;
    while ((g.n - k0 + delta - 1) / delta > k0) ++k0;  // ceil((n-k)/delta) <= k
    for (int k = k0; k <= g.n; ++k) {
        BitSet chosen;
        if (first_k_subset(g, k, chosen, 0,
                           [&](BitSet b) { return is_connected_dominating(g, b); })) {
            res.gamma_c = k;
            res.witness = chosen;
            break;
        }
    }
    auto [tree, lf] = tree_from_witness(g, res.witness);
    res.tree = std::move(tree);
    res.lf_max = lf;
    return res;
}

std::pair<std::vector<std::pair<int, int>>, int> max_leaf_spanning_tree(const Graph& g) {
    require_connected(g, "max_leaf_spanning_tree");
    if (g.n < 2) throw std::invalid_argument("max_leaf_spanning_tree: need n >= 2");
    DominationResult res = gamma_c(g);
    return {res.tree, res.lf_max};
}

}  // namespace beilab
