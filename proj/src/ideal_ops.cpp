#include "beilab/ideal_ops.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace beilab {

namespace {

void require_same_ring(const IdealHandle& a, const IdealHandle& b, const char* op) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument(std::string(op) + ": ring mismatch");
    if (a.ring().has_aux)
        throw std::invalid_argument(std::string(op) + ": aux variable in public ideal");
}

// Exact division by a single polynomial; throws when the remainder is nonzero.
MultiPoly divide_exact(MultiPoly f, const MultiPoly& d) {
    MultiPoly q(f.nvars());
    while (!f.is_zero()) {
        const Term& lt = f.leading();
        if (!d.leading().mono.divides(lt.mono))
            throw std::logic_error("divide_exact: inexact division");
        Monomial m = lt.mono / d.leading().mono;
        mpq_class c = lt.coeff / d.leading().coeff;
        q = q + MultiPoly::monomial(f.nvars(), m, c);
        f.add_scaled(-c, m, d);
    }
    return q;
}

}  // namespace

IdealHandle ideal_intersection(const IdealHandle& I, const IdealHandle& J) {
    require_same_ring(I, J, "ideal_intersection");
    const RingSpec base = I.ring();
    RingSpec ext{base.n, true};
    MultiPoly t = var_poly(ext, ext.aux_index());
    MultiPoly one_minus_t = MultiPoly::constant(ext.vars(), 1) - t;
    std::vector<MultiPoly> gens;
    for (const MultiPoly& g : I.generators())
        if (!g.is_zero()) gens.push_back(t * lift_to_aux(base, g));
    for (const MultiPoly& g : J.generators())
        if (!g.is_zero()) gens.push_back(one_minus_t * lift_to_aux(base, g));
    std::vector<MultiPoly> kept;
    for (const MultiPoly& g : buchberger(std::move(gens)))
        if (!uses_aux(g)) kept.push_back(drop_aux(base, g));
    // the t-free slice of the reduced extended basis is itself reduced
    return IdealHandle::with_known_gb(base, std::move(kept));
}

IdealHandle colon_by_poly(const IdealHandle& I, const MultiPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("colon_by_poly: zero polynomial");
    IdealHandle principal(I.ring(), {f});
    IdealHandle meet = ideal_intersection(I, principal);
    std::vector<MultiPoly> quotients;
    quotients.reserve(meet.generators().size());
    for (const MultiPoly& g : meet.generators()) quotients.push_back(divide_exact(g, f));
    return IdealHandle(I.ring(), std::move(quotients));
}

IdealHandle colon_by_ideal(const IdealHandle& I, const IdealHandle& P) {
    require_same_ring(I, P, "colon_by_ideal");
    bool first = true;
    IdealHandle acc;
    for (const MultiPoly& p : P.generators()) {
        if (p.is_zero()) continue;
        IdealHandle piece = colon_by_poly(I, p);
        acc = first ? piece : ideal_intersection(acc, piece);
        first = false;
    }
    if (first) {
        // colon by the zero ideal is the whole ring
        return IdealHandle(I.ring(), {MultiPoly::constant(I.ring().vars(), 1)});
    }
    return acc;
}

int alpha_quotient(const IdealHandle& J, const IdealHandle& I) {
    require_same_ring(J, I, "alpha_quotient");
    for (const MultiPoly& g : J.gb())
        if (!g.is_homogeneous()) throw std::invalid_argument("alpha_quotient: J not homogeneous");
    for (const MultiPoly& g : I.gb()) {
        if (!g.is_homogeneous()) throw std::invalid_argument("alpha_quotient: I not homogeneous");
        if (!J.contains(g))
            throw std::invalid_argument("alpha_quotient: I is not contained in J");
    }
    int best = -1;
    for (const MultiPoly& g : J.gb()) {
        if (I.contains(g)) continue;
        int d = static_cast<int>(g.degree());
        if (best < 0 || d < best) best = d;
    }
    return best < 0 ? 0 : best;  // J = I  =>  alpha(0) = 0
}

namespace {

// Descending-lex enumeration of all degree-d monomials on nvars variables.
void enumerate_monomials(int nvars, int degree, int var, Monomial& scratch,
                         std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        scratch.set_exp(var, degree);
        out.push_back(scratch);
        scratch.set_exp(var, 0);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        scratch.set_exp(var, e);
        enumerate_monomials(nvars, degree - e, var + 1, scratch, out);
    }
    scratch.set_exp(var, 0);
}

// Sparse exact Gaussian elimination that only answers "are the inserted
// columns dependent". Rows are keyed by arbitrary ints.
class DependencyProbe {
public:
    // returns true when the column is a combination of those already inserted
    bool insert(std::map<int, mpq_class> col) {
        while (!col.empty()) {
            int pivot_row = col.begin()->first;
            auto it = echelon_.find(pivot_row);
            if (it == echelon_.end()) {
                mpq_class lead = col.begin()->second;
                for (auto& [r, v] : col) v /= lead;
                echelon_.emplace(pivot_row, std::move(col));
                return false;
            }
            mpq_class factor = col.begin()->second;
            for (const auto& [r, v] : it->second) {
                auto [pos, inserted] = col.try_emplace(r, 0);
                pos->second -= factor * v;
                if (pos->second == 0) col.erase(pos);
            }
        }
        return true;
    }

private:
    std::map<int, std::map<int, mpq_class>> echelon_;  // pivot row -> unit column
};

// Same elimination over Z/p for the fast screening pass. Columns that stay
// independent mod p are independent over Q; any modular dependency is
// re-checked exactly before it counts.
constexpr uint64_t kProbePrime = (1ull << 61) - 1;

uint64_t mulmod(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % kProbePrime);
}

uint64_t powmod(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::optional<uint64_t> to_mod(const mpq_class& q) {
    uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), kProbePrime);
    if (den == 0) return std::nullopt;
    // floor-division remainder: already the non-negative residue
    uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), kProbePrime);
    return mulmod(num, powmod(den, kProbePrime - 2));
}

class ModProbe {
public:
    bool insert(std::map<int, uint64_t> col) {
        prune(col);
        while (!col.empty()) {
            int pivot_row = col.begin()->first;
            auto it = echelon_.find(pivot_row);
            if (it == echelon_.end()) {
                uint64_t inv = powmod(col.begin()->second, kProbePrime - 2);
                for (auto& [r, v] : col) v = mulmod(v, inv);
                echelon_.emplace(pivot_row, std::move(col));
                return false;
            }
            uint64_t factor = col.begin()->second;
            for (const auto& [r, v] : it->second) {
                auto [pos, inserted] = col.try_emplace(r, 0);
                uint64_t sub = mulmod(factor, v);
                pos->second = pos->second >= sub ? pos->second - sub
                                                 : pos->second + kProbePrime - sub;
                if (pos->second == 0) col.erase(pos);
            }
        }
        return true;
    }

private:
    static void prune(std::map<int, uint64_t>& col) {
        for (auto it = col.begin(); it != col.end();)
            it = it->second == 0 ? col.erase(it) : std::next(it);
    }
    std::map<int, std::map<int, uint64_t>> echelon_;
};

}  // namespace

std::vector<Monomial> standard_monomials(const IdealHandle& I, int degree) {
    int nvars = I.ring().vars();
    std::vector<Monomial> all;
    Monomial scratch(nvars);
    if (degree == 0) {
        all.push_back(scratch);
    } else {
        enumerate_monomials(nvars, degree, 0, scratch, all);
    }
    const auto& basis = I.gb();
    std::vector<Monomial> out;
    out.reserve(all.size());
    for (Monomial& m : all) {
        bool reducible = false;
        for (const MultiPoly& g : basis)
            if (g.leading().mono.divides(m)) {
                reducible = true;
                break;
            }
        if (!reducible) out.push_back(std::move(m));
    }
    return out;
}

bool v_witness_at_degree(const IdealHandle& I, const IdealHandle& P, int degree) {
    return v_witness_at_degree(I, P, standard_monomials(I, degree));
}

bool v_witness_at_degree(const IdealHandle& I, const IdealHandle& P,
                         const std::vector<Monomial>& std_monos) {
    if (std_monos.empty()) return false;
    const auto& gens = P.generators();
    if (gens.empty()) return true;  // f * (0) ⊆ I for any f outside I

    // Row ids: (generator, target standard monomial) pairs, discovered lazily.
    std::map<std::pair<int, Monomial>, int> row_ids;
    auto row_of = [&](int gen, const Monomial& m) {
        auto [it, fresh] = row_ids.try_emplace({gen, m}, static_cast<int>(row_ids.size()));
        return it->second;
    };
    std::vector<std::map<int, mpq_class>> cols;
    cols.reserve(std_monos.size());
    for (const Monomial& m : std_monos) {
        std::map<int, mpq_class> col;
        for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
            if (gens[gi].is_zero()) continue;
            MultiPoly nf = normal_form(gens[gi].times_monomial(m), I.gb());
            for (const Term& t : nf.terms()) {
                auto [it, fresh] = col.try_emplace(row_of(gi, t.mono), 0);
                it->second += t.coeff;
                if (it->second == 0) col.erase(it);
            }
        }
        cols.push_back(std::move(col));
    }

    // Fast screen mod p: full column independence certifies an empty kernel.
    bool screen_usable = true;
    {
        ModProbe screen;
        for (const auto& col : cols) {
            std::map<int, uint64_t> reduced;
            for (const auto& [r, v] : col) {
                auto m = to_mod(v);
                if (!m) {
                    screen_usable = false;
                    break;
                }
                reduced.emplace(r, *m);
            }
            if (!screen_usable) break;
            if (screen.insert(std::move(reduced))) {
                screen_usable = false;  // candidate dependency, confirm exactly
                break;
            }
        }
        if (screen_usable) return false;
    }

    DependencyProbe probe;
    for (auto& col : cols)
        if (probe.insert(std::move(col))) return true;  // dependent => nonzero kernel
    return false;
}

std::optional<int> v_local_linear(const IdealHandle& I, const IdealHandle& P, int max_degree) {
    if (I.is_unit_ideal()) throw std::invalid_argument("v_local_linear: unit ideal");
    for (int d = 0; d <= max_degree; ++d)
        if (v_witness_at_degree(I, P, d)) return d;
    return std::nullopt;
}

}  // namespace beilab
