#include "beilab/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "beilab/errors.hpp"

namespace beilab {

namespace {

// Drop members that contain another member (non-minimal generators).
std::vector<BitSet> minimalize(std::vector<BitSet> gens) {
    std::sort(gens.begin(), gens.end(), [](BitSet a, BitSet b) {
        int ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<BitSet> kept;
    for (BitSet g : gens) {
        bool redundant = false;
        for (BitSet k : kept)
            if (k.subset_of(g)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(g);
    }
    return kept;
}

std::vector<BitSet> colon_by_variable(const std::vector<BitSet>& gens, int v) {
    std::vector<BitSet> out;
    out.reserve(gens.size());
    for (BitSet g : gens) {
        g.reset(v);
        out.push_back(g);
    }
    return minimalize(std::move(out));
}

std::vector<BitSet> intersect(const std::vector<BitSet>& a, const std::vector<BitSet>& b) {
    std::vector<BitSet> out;
    out.reserve(a.size() * b.size());
    for (BitSet x : a)
        for (BitSet y : b) out.push_back(x | y);  // lcm of squarefree monomials
    return minimalize(std::move(out));
}

bool member(const std::vector<BitSet>& gens, BitSet m) {
    for (BitSet g : gens)
        if (g.subset_of(m)) return true;
    return false;
}

}  // namespace

SquarefreeMonomialIdeal SquarefreeMonomialIdeal::edge_ideal(const Graph& g) {
    SquarefreeMonomialIdeal ideal;
    ideal.clutter = clutter_of_graph(g);
    for (int v = 0; v < g.n; ++v) ideal.ground_names.push_back("t" + std::to_string(v + 1));
    return ideal;
}

int v_monomial_at_cover(const SquarefreeMonomialIdeal& ideal, BitSet cover) {
    const auto& gens = ideal.clutter.edges;
    // (I : P_W) = ∩_{w in W} (I : t_w)
    std::vector<BitSet> colon;
    bool first = true;
    cover.for_each([&](int w) {
        std::vector<BitSet> piece = colon_by_variable(gens, w);
        colon = first ? std::move(piece) : intersect(colon, piece);
        first = false;
    });
    if (first) throw std::invalid_argument("v_monomial_at_cover: empty cover");
    int best = -1;
    for (BitSet g : colon) {
        if (member(gens, g)) continue;
        int d = g.count();
        if (best < 0 || d < best) best = d;
    }
    if (best < 0)
        throw std::logic_error("v_monomial_at_cover: colon equals the ideal at a minimal prime");
    return best;
}

int v_monomial(const SquarefreeMonomialIdeal& ideal) {
    if (ideal.clutter.edges.empty())
        throw std::invalid_argument("v_monomial: zero ideal has no associated primes");
    int best = -1;
    for (BitSet cover : minimal_vertex_covers(ideal.clutter)) {
        int d = v_monomial_at_cover(ideal, cover);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

int v_edge_ideal_both_routes(const Graph& h) {
    if (h.edge_count() == 0)
        throw std::invalid_argument("v_edge_ideal_both_routes: edgeless graph");
    int algebraic = v_monomial(SquarefreeMonomialIdeal::edge_ideal(h));
    if (is_connected(h)) {
        int stable = v_edge_ideal_combinatorial(h);
        if (stable != algebraic)
            throw theorem_violation("stable-set route " + std::to_string(stable) +
                                    " != monomial route " + std::to_string(algebraic));
    }
    return algebraic;
}

}  // namespace beilab
