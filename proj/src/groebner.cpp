#include "beilab/groebner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace beilab {

MultiPoly normal_form(MultiPoly f, std::span<const MultiPoly> basis) {
    for (const MultiPoly& b : basis)
        if (b.is_zero()) throw std::invalid_argument("normal_form: zero basis polynomial");
    size_t i = 0;
    while (i < f.term_count()) {
        const Term& t = f.terms()[i];
        bool reduced = false;
        for (const MultiPoly& b : basis) {
            if (!b.leading().mono.divides(t.mono)) continue;
            Monomial q = t.mono / b.leading().mono;
            mpq_class c = -t.coeff / b.leading().coeff;
            f.add_scaled(c, q, b);  // cancels term i; earlier terms keep their values
            reduced = true;
            break;
        }
        if (!reduced) ++i;
    }
    return f;
}

namespace {

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    Monomial l = Monomial::lcm(f.leading().mono, g.leading().mono);
    MultiPoly a = f.times_monomial(l / f.leading().mono).scaled(1 / f.leading().coeff);
    MultiPoly b = g.times_monomial(l / g.leading().mono).scaled(1 / g.leading().coeff);
    return a - b;
}

struct Pair {
    int i, j;
    Monomial lcm;
};

bool pair_before(const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = a.lcm.cmp(b.lcm);
    if (c != 0) return c < 0;
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
}

std::vector<MultiPoly> reduce_basis(std::vector<MultiPoly> basis) {
    // minimal leading terms
    std::vector<MultiPoly> minimal;
    std::sort(basis.begin(), basis.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return a.leading().mono < b.leading().mono;
    });
    for (auto& g : basis) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.leading().mono.divides(g.leading().mono)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(g));
    }
    // tail reduction against the final leading-term set
    std::vector<MultiPoly> out;
    out.reserve(minimal.size());
    for (size_t k = 0; k < minimal.size(); ++k) {
        std::vector<MultiPoly> others;
        others.reserve(minimal.size() - 1);
        for (size_t l = 0; l < minimal.size(); ++l)
            if (l != k) others.push_back(minimal[l]);
        MultiPoly r = normal_form(minimal[k], others);
        if (!r.is_zero()) out.push_back(r.monic());
    }
    std::sort(out.begin(), out.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return a.leading().mono > b.leading().mono;
    });
    return out;
}

}  // namespace

std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens) {
    std::vector<MultiPoly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) return {};

    std::vector<Pair> pairs;
    auto push_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i)
            pairs.push_back({i, j, Monomial::lcm(basis[i].leading().mono,
                                                 basis[j].leading().mono)});
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs_for(j);

    auto pair_pending = [&](int a, int b) {
        for (const Pair& p : pairs)
            if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
        return false;
    };

    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (pair_before(pairs[k], pairs[best])) best = k;
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));

        const Monomial& li = basis[p.i].leading().mono;
        const Monomial& lj = basis[p.j].leading().mono;
        if (li.coprime_with(lj)) continue;  // Buchberger's first criterion
        // chain criterion: some other leading term divides the lcm and both
        // companion pairs are already settled
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (basis[k].leading().mono.divides(p.lcm) && !pair_pending(p.i, k) &&
                !pair_pending(p.j, k))
                skip = true;
        }
        if (skip) continue;

        MultiPoly r = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        push_pairs_for(static_cast<int>(basis.size()) - 1);
    }
    return reduce_basis(std::move(basis));
}

bool is_groebner(std::span<const MultiPoly> gens) {
    std::vector<MultiPoly> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i].leading().mono.coprime_with(basis[j].leading().mono)) continue;
            if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
        }
    return true;
}

IdealHandle::IdealHandle(RingSpec ring, std::vector<MultiPoly> gens)
    : ring_(ring), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {}

IdealHandle IdealHandle::with_known_gb(RingSpec ring, std::vector<MultiPoly> gb) {
    IdealHandle h(ring, gb);
    h.gb_known_ = true;
    h.cache_->gb = std::move(gb);
    return h;
}

const std::vector<MultiPoly>& IdealHandle::gb() const {
    if (!cache_) throw std::logic_error("IdealHandle: empty handle");
    if (gb_known_) return cache_->gb;
    std::call_once(cache_->flag, [this] { cache_->gb = buchberger(gens_); });
    return cache_->gb;
}

bool IdealHandle::is_unit_ideal() const {
    const auto& basis = gb();
    return basis.size() == 1 && basis.front().leading().mono.is_one();
}

bool IdealHandle::contains(const MultiPoly& f) const {
    return normal_form(f, gb()).is_zero();
}

bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
    if (!(a.ring() == b.ring())) return false;
    const auto& ga = a.gb();
    const auto& gbv = b.gb();
    if (ga.size() != gbv.size()) return false;
    for (size_t i = 0; i < ga.size(); ++i)
        if (!(ga[i] == gbv[i])) return false;
    return true;
}

}  // namespace beilab
