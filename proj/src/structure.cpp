#include "beilab/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "beilab/errors.hpp"

namespace beilab {

namespace {

BitSet interval_open(int i, int k) {  // {i+1, ..., k-1}
    BitSet b;
    for (int j = i + 1; j < k; ++j) b.set(j);
    return b;
}

}  // namespace

ClosednessCertificate is_closed_labeling(const Graph& g) {
    ClosednessCertificate cert;
    for (auto [i, k] : g.edges) {
        BitSet between = interval_open(i, k);
        BitSet bad = (between - g.adj[i]) | (between - g.adj[k]);
        if (bad.any()) {
            cert.closed = false;
            cert.violation = {i, bad.first(), k};
            return cert;
        }
    }
    cert.closed = true;
    return cert;
}

namespace {

// Backtracking over positions: place[k] = vertex at label k. Placing a vertex
// at position k only needs the triples (i, j, k); everything earlier was
// checked when its own position was filled.
bool closed_labeling_dfs(const Graph& g, std::vector<int>& place, BitSet used, int k) {
    int n = g.n;
    if (k == n) return true;
    for (int v = 0; v < n; ++v) {
        if (used.test(v)) continue;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            if (!g.has_edge(place[i], v)) continue;
            for (int j = i + 1; j < k; ++j) {
                if (!g.has_edge(place[i], place[j]) || !g.has_edge(place[j], v)) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        place[k] = v;
        used.set(v);
        if (closed_labeling_dfs(g, place, used, k + 1)) return true;
        used.reset(v);
    }
    return false;
}

}  // namespace

ClosednessCertificate find_closed_labeling(const Graph& g) {
    if (g.n > 10)
        throw unsupported_size_error("closed-labeling search supports n <= 10, got n=" +
                                     std::to_string(g.n));
    ClosednessCertificate cert = is_closed_labeling(g);
    if (cert.closed) {
        std::vector<int> id(g.n);
        std::iota(id.begin(), id.end(), 0);
        cert.relabeling = id;
        return cert;
    }
    std::vector<int> place(g.n, -1);
    if (closed_labeling_dfs(g, place, BitSet{}, 0)) {
        std::vector<int> perm(g.n);  // old -> new
        for (int pos = 0; pos < g.n; ++pos) perm[place[pos]] = pos;
        cert.closed = true;
        cert.violation.reset();
        cert.relabeling = perm;
    }
    return cert;
}

namespace {

// Exact maximum clique (greedy order + DFS); n is desk scale and this only
// backs the theta sanity bound.
int max_clique_dfs(const Graph& g, BitSet allowed, int have) {
    int best = have;
    while (allowed.any()) {
        if (have + allowed.count() <= best) break;
        int v = allowed.first();
        allowed.reset(v);
        best = std::max(best, max_clique_dfs(g, allowed & g.adj[v], have + 1));
    }
    return best;
}

struct ColorState {
    const Graph* comp;
    int k = 0;
    std::vector<int> color;
};

// DSATUR-ordered k-coloring feasibility with the usual "at most one fresh
// color" symmetry break.
bool k_colorable_dfs(ColorState& st, int colored, int used) {
    const Graph& h = *st.comp;
    if (colored == h.n) return true;
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < h.n; ++v) {
        if (st.color[v] >= 0) continue;
        BitSet seen;
        h.adj[v].for_each([&](int u) {
            if (st.color[u] >= 0) seen.set(st.color[u]);
        });
        int sat = seen.count();
        int deg = h.degree(v);
        if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
            pick = v;
            pick_sat = sat;
            pick_deg = deg;
        }
    }
    BitSet forbidden;
    h.adj[pick].for_each([&](int u) {
        if (st.color[u] >= 0) forbidden.set(st.color[u]);
    });
    int limit = std::min(st.k - 1, used);  // colors 0..used are candidates
    for (int c = 0; c <= limit; ++c) {
        if (forbidden.test(c)) continue;
        st.color[pick] = c;
        if (k_colorable_dfs(st, colored + 1, std::max(used, c + 1))) return true;
        st.color[pick] = -1;
    }
    return false;
}

}  // namespace

std::pair<int, std::vector<BitSet>> theta_clique_cover(const Graph& g) {
    if (g.n == 0) return {0, {}};
    Graph comp = complement(g);
    int omega = max_clique_dfs(g, g.vertices(), 0);
    int lower = std::max((g.n + omega - 1) / omega, max_clique_dfs(comp, comp.vertices(), 0));
    ColorState st;
    st.comp = &comp;
    for (int k = std::max(lower, 1);; ++k) {
        st.k = k;
        st.color.assign(g.n, -1);
        if (k_colorable_dfs(st, 0, 0)) {
            std::vector<BitSet> classes(k);
            for (int v = 0; v < g.n; ++v) classes[st.color[v]].set(v);
            classes.erase(std::remove_if(classes.begin(), classes.end(),
                                         [](BitSet b) { return b.none(); }),
                          classes.end());
            std::sort(classes.begin(), classes.end(),
                      [](BitSet a, BitSet b) { return a.first() < b.first(); });
            int theta = static_cast<int>(classes.size());
            if (theta * omega < g.n) throw std::logic_error("theta below n/omega bound");
            return {theta, classes};
        }
    }
}

namespace {

int im_dfs(const std::vector<BitSet>& conflicts, BitSet available, int have) {
    int best = have;
    while (available.any()) {
        if (have + available.count() <= best) break;
        int e = available.first();
        available.reset(e);
        best = std::max(best, im_dfs(conflicts, available - conflicts[e], have + 1));
    }
    return best;
}

}  // namespace

int induced_matching_number(const Graph& g) {
    int m = g.edge_count();
    if (m == 0) return 0;
    // Edges conflict when they share a vertex or some edge joins their spans.
    std::vector<BitSet> conflicts(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            auto [u1, v1] = g.edges[a];
            auto [u2, v2] = g.edges[b];
            bool clash = u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 ||
                         g.has_edge(u1, u2) || g.has_edge(u1, v2) || g.has_edge(v1, u2) ||
                         g.has_edge(v1, v2);
            if (clash) {
                conflicts[a].set(b);
                conflicts[b].set(a);
            }
        }
    if (m > BitSet::capacity) throw unsupported_size_error("too many edges for induced matching");
    return im_dfs(conflicts, BitSet::first_n(m), 0);
}

namespace {

void lip_dfs(const Graph& g, int last, BitSet on_path, int edges, int& best) {
    best = std::max(best, edges);
    (g.adj[last] - on_path).for_each([&](int u) {
        // u extends the induced path iff it sees nothing on the path but last
        BitSet earlier = on_path;
        earlier.reset(last);
        if (g.adj[u].intersects(earlier)) return;
        lip_dfs(g, u, on_path | BitSet::single(u), edges + 1, best);
    });
}

}  // namespace

int longest_induced_path(const Graph& g) {
    int best = 0;
    for (int s = 0; s < g.n; ++s) lip_dfs(g, s, BitSet::single(s), 0, best);
    return best;
}

Graph initial_graph(const Graph& g) {
    if (!is_closed_labeling(g).closed)
        throw std::invalid_argument(
            "initial_graph: labeling is not closed, the initial ideal is not this edge ideal");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (auto [i, j] : g.edges) edges.emplace_back(i, g.n + j);
    return Graph::build0(2 * g.n, std::move(edges));
}

std::vector<BitSet> minimal_vertex_covers(const Clutter& c) {
    if (c.ground > 30)
        throw unsupported_size_error("cover enumeration supports ground sets up to 30 elements");
    std::vector<BitSet> covers;
    uint64_t total = 1ull << c.ground;
    for (uint64_t mask = 0; mask < total; ++mask) {
        BitSet w{mask, 0};
        bool cover = true;
        for (const BitSet& e : c.edges)
            if (!e.intersects(w)) {
                cover = false;
                break;
            }
        if (!cover) continue;
        bool minimal = true;
        for (int x = w.first(); x >= 0 && minimal; x = w.next(x)) {
            // x needs a private member set
            bool has_private = false;
            for (const BitSet& e : c.edges)
                if ((e & w) == BitSet::single(x)) {
                    has_private = true;
                    break;
                }
            minimal = has_private;
        }
        if (minimal) covers.push_back(w);
    }
    std::sort(covers.begin(), covers.end(), [](BitSet a, BitSet b) {
        int ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a < b;
    });
    return covers;
}

Clutter clutter_of_graph(const Graph& g) {
    Clutter c;
    c.ground = g.n;
    for (auto [u, v] : g.edges) c.edges.push_back(BitSet::single(u) | BitSet::single(v));
    return c;
}

int v_edge_ideal_combinatorial(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("v_edge_ideal_combinatorial: edgeless graph (prime edge ideal)");
    BitSet touched;
    for (auto [u, v] : g.edges) {
        touched.set(u);
        touched.set(v);
    }
    std::vector<int> verts = touched.to_vector();
    int t = static_cast<int>(verts.size());
    if (t > 30) throw unsupported_size_error("stable-set sweep supports up to 30 covered vertices");
    auto is_minimal_cover = [&](BitSet w) {
        for (auto [u, v] : g.edges)
            if (!w.test(u) && !w.test(v)) return false;
        for (int x = w.first(); x >= 0; x = w.next(x)) {
            bool has_private = false;
            for (auto [u, v] : g.edges) {
                BitSet e = BitSet::single(u) | BitSet::single(v);
                if ((e & w) == BitSet::single(x)) {
                    has_private = true;
                    break;
                }
            }
            if (!has_private) return false;
        }
        return true;
    };
    int best = t + 1;
    for (uint64_t mask = 1; mask < (1ull << t); ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        BitSet a;
        for (int b = 0; b < t; ++b)
            if ((mask >> b) & 1) a.set(verts[b]);
        bool stable = true;
        a.for_each([&](int v) {
            if (g.adj[v].intersects(a)) stable = false;
        });
        if (!stable) continue;
        if (is_minimal_cover(neighborhood(g, a))) best = size;
    }
    if (best > t) throw std::logic_error("no stable set with minimal-cover neighborhood found");
    return best;
}

int reg_closed(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("reg_closed: graph must be connected");
    if (!is_closed_labeling(g).closed)
        throw std::invalid_argument("reg_closed: labeling is not closed");
    return longest_induced_path(g);
}

}  // namespace beilab
