#include "beilab/bei.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "beilab/domination.hpp"
#include "beilab/errors.hpp"
#include "beilab/parallel.hpp"

namespace beilab {

namespace {

constexpr int kComponentCap = 20;

void add_variable_gens(const RingSpec& ring, BitSet s, std::vector<MultiPoly>& gens) {
    s.for_each([&](int i) {
        gens.push_back(var_poly(ring, ring.x_index(i)));
        gens.push_back(var_poly(ring, ring.y_index(i)));
    });
}

void add_completed_component_gens(const RingSpec& ring, const BitSet& comp,
                                  std::vector<MultiPoly>& gens) {
    std::vector<int> vs = comp.to_vector();
    for (size_t a = 0; a < vs.size(); ++a)
        for (size_t b = a + 1; b < vs.size(); ++b) gens.push_back(two_minor(ring, vs[a], vs[b]));
}

// i is a cut point of the induced subgraph of g on `keep` (i in keep).
bool cut_point_in_restricted(const Graph& g, BitSet keep, int i) {
    auto before = connected_components(induced_subgraph(g, keep).graph).size();
    BitSet rest = keep;
    rest.reset(i);
    auto after = connected_components(induced_subgraph(g, rest).graph).size();
    return after > before;
}

bool cut_set_valid(const Graph& g, BitSet vertices_of_comp, BitSet s) {
    BitSet t = vertices_of_comp - s;
    bool ok = true;
    s.for_each([&](int i) {
        if (!ok) return;
        BitSet keep = t;
        keep.set(i);
        if (!cut_point_in_restricted(g, keep, i)) ok = false;
    });
    return ok;
}

// Subsets of `universe` ordered by (popcount, numeric value).
std::vector<BitSet> ordered_subsets(BitSet universe) {
    std::vector<int> vs = universe.to_vector();
    if (vs.size() > kComponentCap)
        throw unsupported_size_error("minimal-prime enumeration supports components up to " +
                                     std::to_string(kComponentCap) + " vertices");
    std::vector<BitSet> out;
    out.reserve(1ull << vs.size());
    for (uint64_t mask = 0; mask < (1ull << vs.size()); ++mask) {
        BitSet s;
        for (size_t b = 0; b < vs.size(); ++b)
            if ((mask >> b) & 1) s.set(vs[b]);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](BitSet a, BitSet b) {
        int ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a < b;
    });
    return out;
}

}  // namespace

const char* to_string(VMethod m) {
    switch (m) {
        case VMethod::combinatorial_shortcut: return "combinatorial-shortcut";
        case VMethod::linear_sweep: return "linear-sweep";
        case VMethod::colon_oracle: return "colon-oracle";
    }
    return "?";
}

RingSpec ring_for(const Graph& g) { return RingSpec{g.n, false}; }

IdealHandle binomial_edge_ideal(const Graph& g) {
    RingSpec ring = ring_for(g);
    std::vector<MultiPoly> gens;
    gens.reserve(g.edges.size());
    for (auto [i, j] : g.edges) gens.push_back(two_minor(ring, i, j));
    return IdealHandle(ring, std::move(gens));
}

IdealHandle complete_graph_ideal(const RingSpec& ring) {
    std::vector<MultiPoly> gens;
    for (int i = 0; i < ring.n; ++i)
        for (int j = i + 1; j < ring.n; ++j) gens.push_back(two_minor(ring, i, j));
    return IdealHandle(ring, std::move(gens));
}

PrimeSpec prime_PS(const Graph& g, BitSet s) {
    if (!s.subset_of(g.vertices())) throw std::invalid_argument("prime_PS: S outside [n]");
    PrimeSpec p;
    p.s = s;
    p.components = connected_components(induced_subgraph(g, g.vertices() - s).graph);
    // translate back to original labels
    {
        auto sub = induced_subgraph(g, g.vertices() - s);
        std::vector<BitSet> orig;
        for (const BitSet& comp : p.components) {
            BitSet o;
            comp.for_each([&](int v) { o.set(sub.new_to_old[v]); });
            orig.push_back(o);
        }
        std::sort(orig.begin(), orig.end(),
                  [](BitSet a, BitSet b) { return a.first() < b.first(); });
        p.components = std::move(orig);
    }
    RingSpec ring = ring_for(g);
    std::vector<MultiPoly> gens;
    add_variable_gens(ring, s, gens);
    for (const BitSet& comp : p.components) add_completed_component_gens(ring, comp, gens);
    p.ideal = IdealHandle(ring, std::move(gens));
    bool ok = true;
    std::vector<BitSet> comps_of_g = connected_components(g);
    s.for_each([&](int i) {
        if (!ok) return;
        for (const BitSet& c : comps_of_g)
            if (c.test(i) && !cut_set_valid(g, c, c & s)) ok = false;
    });
    p.minimal = ok;
    return p;
}

std::vector<PrimeSpec> minimal_primes(const Graph& g) {
    std::vector<BitSet> comps = connected_components(g);
    // valid cut sets per component
    std::vector<std::vector<BitSet>> valid(comps.size());
    for (size_t c = 0; c < comps.size(); ++c)
        for (BitSet s : ordered_subsets(comps[c]))
            if (cut_set_valid(g, comps[c], s)) valid[c].push_back(s);
    // product over components; leftmost component varies slowest
    std::vector<BitSet> combined{BitSet{}};
    for (const auto& options : valid) {
        std::vector<BitSet> next;
        next.reserve(combined.size() * options.size());
        for (BitSet base : combined)
            for (BitSet opt : options) next.push_back(base | opt);
        combined = std::move(next);
    }
    std::sort(combined.begin(), combined.end(), [](BitSet a, BitSet b) {
        int ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a < b;
    });
    std::vector<PrimeSpec> out;
    out.reserve(combined.size());
    for (BitSet s : combined) out.push_back(prime_PS(g, s));
    return out;
}

int v_local(const Graph& g, const PrimeSpec& p) {
    if (!p.minimal) throw std::invalid_argument("v_local: prime is not minimal");
    IdealHandle J = binomial_edge_ideal(g);
    if (auto hit = v_local_linear(J, p.ideal, g.n)) return *hit;
    // inconclusive sweep; fall back to the exact colon route
    return alpha_quotient(colon_by_ideal(J, p.ideal), J);
}

int v_local_at_Kn(const Graph& g, VMode mode) {
    if (!is_connected(g)) throw std::invalid_argument("v_local_at_Kn: graph is disconnected");
    if (mode == VMode::combinatorial) return dc_min(g);
    int algebraic = v_local(g, prime_PS(g, BitSet{}));
    if (mode == VMode::both) {
        int comb = dc_min(g);
        if (comb != algebraic)
            throw theorem_violation("v at the ambient prime is " + std::to_string(algebraic) +
                                    " but the domination minimum is " + std::to_string(comb));
    }
    return algebraic;
}

namespace {

struct ComponentV {
    int v = 0;
    BitSet achieving_s;  // in original labels
    bool swept = false;
};

ComponentV component_v(const Graph& g, const BitSet& comp) {
    ComponentV out;
    auto sub = induced_subgraph(g, comp);
    if (sub.graph.edge_count() == 0) return out;  // zero ideal contributes 0
    int dc = dc_min(sub.graph);
    IdealHandle J = binomial_edge_ideal(sub.graph);
    std::vector<PrimeSpec> primes = minimal_primes(sub.graph);
    std::vector<const PrimeSpec*> cands;
    for (const PrimeSpec& p : primes)
        if (p.s.any()) cands.push_back(&p);  // P_∅ is the dc shortcut
    J.gb();                                  // materialize before the parallel probes
    for (int d = 0; d < dc; ++d) {
        std::vector<Monomial> stds = standard_monomials(J, d);
        std::vector<char> hit(cands.size(), 0);
        parallel_for(cands.size(),
                     [&](size_t i) { hit[i] = v_witness_at_degree(J, cands[i]->ideal, stds); });
        for (size_t i = 0; i < cands.size(); ++i) {
            if (!hit[i]) continue;
            out.v = d;
            out.swept = true;
            cands[i]->s.for_each([&](int v) { out.achieving_s.set(sub.new_to_old[v]); });
            return out;
        }
    }
    out.v = dc;  // achieved at P_∅, by the domination description
    return out;
}

}  // namespace

VNumberReport v_number(const Graph& g) {
    VNumberReport rep;
    std::vector<BitSet> comps = connected_components(g);
    BitSet achieving_s;
    bool any_sweep = false;
    bool has_edges = g.edge_count() > 0;
    for (const BitSet& comp : comps) {
        ComponentV cv = component_v(g, comp);
        rep.v += cv.v;
        achieving_s |= cv.achieving_s;
        any_sweep = any_sweep || cv.swept;
    }
    if (g.n > 0 && is_connected(g)) rep.v_at_kn = dc_min(g);
    if (g.n > 0 && has_edges) {
        if (rep.v_at_kn) rep.v_local.emplace_back(prime_PS(g, BitSet{}), *rep.v_at_kn);
        PrimeSpec achieve = prime_PS(g, achieving_s);
        if (achieving_s.any()) rep.v_local.emplace_back(achieve, rep.v);
        rep.achieving_prime = std::move(achieve);
    } else if (g.n > 0) {
        rep.achieving_prime = prime_PS(g, BitSet{});
    }
    rep.method = any_sweep ? VMethod::linear_sweep : VMethod::combinatorial_shortcut;
    return rep;
}

VNumberReport v_number_direct(const Graph& g) {
    VNumberReport rep;
    if (g.edge_count() == 0) return rep;
    IdealHandle J = binomial_edge_ideal(g);
    std::vector<PrimeSpec> primes = minimal_primes(g);
    for (int d = 0; d <= 2 * g.n; ++d) {
        std::vector<Monomial> stds = standard_monomials(J, d);
        for (const PrimeSpec& p : primes) {
            if (!v_witness_at_degree(J, p.ideal, stds)) continue;
            rep.v = d;
            rep.achieving_prime = p;
            rep.method = VMethod::linear_sweep;
            if (is_connected(g)) rep.v_at_kn = v_local(g, prime_PS(g, BitSet{}));
            return rep;
        }
    }
    throw std::logic_error("v_number_direct: sweep exhausted");  // unreachable for radical J_G
}

int v_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2)
        throw std::invalid_argument("v_multipartite: need at least two parts");
    for (int a : parts)
        if (a < 1) throw std::invalid_argument("v_multipartite: parts must be positive");
    int smallest = *std::min_element(parts.begin(), parts.end());
    int largest = *std::max_element(parts.begin(), parts.end());
    if (largest == 1) return 0;  // complete graph: J_G is prime
    return smallest == 1 ? 1 : 2;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int a : parts) n += a;
    std::vector<int> part_of;
    for (size_t l = 0; l < parts.size(); ++l)
        for (int k = 0; k < parts[l]; ++k) part_of.push_back(static_cast<int>(l));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    return Graph::build0(n, std::move(edges));
}

std::vector<IdealHandle> multipartite_part_primes(const std::vector<int>& parts) {
    Graph g = complete_multipartite(parts);
    RingSpec ring = ring_for(g);
    std::vector<IdealHandle> out;
    int offset = 0;
    for (int a : parts) {
        BitSet part;
        for (int k = 0; k < a; ++k) part.set(offset + k);
        offset += a;
        if (a < 2) continue;
        std::vector<MultiPoly> gens;
        add_variable_gens(ring, g.vertices() - part, gens);
        out.emplace_back(ring, std::move(gens));
    }
    return out;
}

SquarefreeMonomialIdeal initial_ideal(const Graph& g) {
    SquarefreeMonomialIdeal out;
    out.clutter.ground = 2 * g.n;
    RingSpec ring = ring_for(g);
    for (int i = 0; i < 2 * g.n; ++i) out.ground_names.push_back(ring.var_name(i));
    IdealHandle J = binomial_edge_ideal(g);
    for (const MultiPoly& b : J.gb()) {
        const Monomial& lt = b.leading().mono;
        if (!lt.squarefree())
            throw std::logic_error("initial_ideal: non-squarefree leading term " +
                                   lt.to_string(ring));
        BitSet support;
        for (int v = 0; v < 2 * g.n; ++v)
            if (lt.exp(v)) support.set(v);
        out.clutter.edges.push_back(support);
    }
    return out;
}

Graph build_Ge(const Graph& g, int i, int j) {
    if (i == j) throw std::invalid_argument("build_Ge: endpoints must differ");
    if (g.has_edge(i, j)) throw std::invalid_argument("build_Ge: {i,j} is an edge");
    std::vector<std::pair<int, int>> edges = g.edges;
    for (int side : {i, j}) {
        std::vector<int> nb = g.adj[side].to_vector();
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b) edges.emplace_back(nb[a], nb[b]);
    }
    return Graph::build0(g.n, std::move(edges));
}

bool colon_single_edge_check(const Graph& g, int i, int j) {
    if (i > j) std::swap(i, j);
    if (g.has_edge(i, j)) throw std::invalid_argument("colon_single_edge_check: not a non-edge");
    RingSpec ring = ring_for(g);
    IdealHandle J = binomial_edge_ideal(g);
    IdealHandle lhs = colon_by_poly(J, two_minor(ring, i, j));
    std::vector<MultiPoly> gens = binomial_edge_ideal(build_Ge(g, i, j)).generators();
    std::set<Monomial> monos;
    for (const auto& path : simple_paths_between(g, i, j)) {
        int s = static_cast<int>(path.size()) - 2;
        for (int t = 0; t <= s; ++t) {
            Monomial m(ring.vars());
            for (int k = 0; k < s; ++k) {
                int vertex = path[static_cast<size_t>(k) + 1];
                int var = k < t ? ring.y_index(vertex) : ring.x_index(vertex);
                m.set_exp(var, m.exp(var) + 1);
            }
            monos.insert(m);
        }
    }
    for (const Monomial& m : monos) gens.push_back(MultiPoly::monomial(ring.vars(), m));
    return ideal_equal(lhs, IdealHandle(ring, std::move(gens)));
}

namespace {

std::vector<BitSet> minimal_dc_members(const Graph& g) {
    std::vector<BitSet> kept;
    for (BitSet b : ordered_subsets(g.vertices())) {
        bool dominated_by_kept = false;
        for (BitSet k : kept)
            if (k.subset_of(b)) {
                dominated_by_kept = true;
                break;
            }
        if (dominated_by_kept) continue;
        if (dc_membership(g, b)) kept.push_back(b);
    }
    return kept;
}

}  // namespace

bool colon_formula_check(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("colon_formula_check: disconnected graph");
    if (g.is_complete()) throw std::invalid_argument("colon_formula_check: complete graph");
    RingSpec ring = ring_for(g);
    IdealHandle J = binomial_edge_ideal(g);

    IdealHandle lhs;
    bool first = true;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            if (g.has_edge(i, j)) continue;
            IdealHandle piece = colon_by_poly(J, two_minor(ring, i, j));
            lhs = first ? piece : ideal_intersection(lhs, piece);
            first = false;
        }
    IdealHandle lhs_by_ideal = colon_by_ideal(J, complete_graph_ideal(ring));
    if (!ideal_equal(lhs, lhs_by_ideal)) return false;

    std::set<Monomial> monos;
    for (BitSet b : minimal_dc_members(g)) {
        std::vector<int> vs = b.to_vector();
        for (uint64_t mask = 0; mask < (1ull << vs.size()); ++mask) {
            Monomial m(ring.vars());
            for (size_t k = 0; k < vs.size(); ++k)
                m.set_exp((mask >> k) & 1 ? ring.y_index(vs[k]) : ring.x_index(vs[k]), 1);
            monos.insert(m);
        }
    }
    std::vector<MultiPoly> rhs_gens = J.generators();
    for (const Monomial& m : monos) rhs_gens.push_back(MultiPoly::monomial(ring.vars(), m));
    IdealHandle rhs(ring, rhs_gens);
    if (!ideal_equal(lhs, rhs)) return false;

    // the reduced basis of J_G together with the split monomials is already a
    // Groebner basis of the sum
    std::vector<MultiPoly> combined = J.gb();
    for (const Monomial& m : monos) combined.push_back(MultiPoly::monomial(ring.vars(), m));
    return is_groebner(combined);
}

ChainResult chain_check_closed(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("chain_check_closed: disconnected graph");
    if (!is_closed_labeling(g).closed)
        throw std::invalid_argument("chain_check_closed: labeling is not closed");
    if (g.is_complete()) return {0, 1, 1, 1, true};
    ChainResult out;
    out.v = v_number(g).v;
    out.theta = theta_clique_cover(g).first;
    out.v_init = v_monomial(initial_ideal(g));
    int cross = v_edge_ideal_combinatorial(initial_graph(g));
    if (cross != out.v_init)
        throw theorem_violation("initial-ideal v " + std::to_string(out.v_init) +
                                " != stable-set value " + std::to_string(cross) +
                                " on the initial graph");
    out.ell = longest_induced_path(g);
    out.pass = out.v < out.theta && out.theta <= out.v_init && out.v_init <= out.ell;
    return out;
}

bool decomposition_check(const Graph& g) {
    std::vector<PrimeSpec> primes = minimal_primes(g);
    IdealHandle meet = primes.front().ideal;
    for (size_t k = 1; k < primes.size(); ++k) meet = ideal_intersection(meet, primes[k].ideal);
    return ideal_equal(meet, binomial_edge_ideal(g));
}

}  // namespace beilab
