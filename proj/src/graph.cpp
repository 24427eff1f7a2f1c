#include "beilab/graph.hpp"

#include <algorithm>

#include "beilab/errors.hpp"

namespace beilab {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edge_list) {
    std::vector<std::pair<int, int>> shifted;
    shifted.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw input_error("edge endpoint out of range: {" + std::to_string(u) + "," +
                              std::to_string(v) + "} with n=" + std::to_string(n));
        shifted.emplace_back(u - 1, v - 1);
    }
    return build0(n, std::move(shifted));
}

Graph Graph::build0(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 0 || n > BitSet::capacity)
        throw input_error("vertex count out of range: " + std::to_string(n));
    Graph g;
    g.n = n;
    g.adj.assign(n, BitSet{});
    for (auto& [u, v] : edge_list) {
        if (u == v) throw input_error("loop at vertex " + std::to_string(u + 1));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    g.edges = std::move(edge_list);
    for (auto [u, v] : g.edges) {
        g.adj[u].set(v);
        g.adj[v].set(u);
    }
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::is_complete() const {
    return edge_count() == n * (n - 1) / 2;
}

std::vector<BitSet> connected_components(const Graph& g) {
    std::vector<BitSet> comps;
    BitSet seen;
    for (int s = 0; s < g.n; ++s) {
        if (seen.test(s)) continue;
        BitSet comp = BitSet::single(s);
        BitSet frontier = comp;
        while (frontier.any()) {
            BitSet next;
            frontier.for_each([&](int v) { next |= g.adj[v]; });
            frontier = next - comp;
            comp |= next;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.n <= 1 || connected_components(g).size() == 1;
}

InducedSubgraph induced_subgraph(const Graph& g, BitSet s) {
    InducedSubgraph out;
    out.old_to_new.assign(g.n, -1);
    s.for_each([&](int v) {
        out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    });
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (s.test(u) && s.test(v)) edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
    out.graph = Graph::build0(static_cast<int>(out.new_to_old.size()), std::move(edges));
    return out;
}

bool is_cut_point(const Graph& g, int v) {
    size_t before = connected_components(g).size();
    BitSet rest = g.vertices();
    rest.reset(v);
    size_t after = connected_components(induced_subgraph(g, rest).graph).size();
    return after > before;
}

BitSet neighborhood(const Graph& g, BitSet s) {
    BitSet out;
    s.for_each([&](int v) { out |= g.adj[v]; });
    return out;
}

namespace {

void path_dfs(const Graph& g, int v, int target, BitSet on_path, std::vector<int>& seq,
              std::vector<std::vector<int>>& out) {
    if (v == target) {
        out.push_back(seq);
        return;
    }
    // ascending neighbor order gives lexicographic path order
    (g.adj[v] - on_path).for_each([&](int u) {
        on_path.set(u);
        seq.push_back(u);
        path_dfs(g, u, target, on_path, seq, out);
        seq.pop_back();
        on_path.reset(u);
    });
}

}  // namespace

std::vector<std::vector<int>> simple_paths_between(const Graph& g, int i, int j) {
    if (i == j) throw input_error("path endpoints must differ");
    std::vector<std::vector<int>> out;
    std::vector<int> seq{i};
    path_dfs(g, i, j, BitSet::single(i), seq, out);
    return out;
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph::build0(g.n, std::move(edges));
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
    return Graph::build0(g.n, std::move(edges));
}

}  // namespace beilab
