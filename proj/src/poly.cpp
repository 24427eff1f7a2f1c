#include "beilab/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace beilab {

using expkern::active_ops;

std::string RingSpec::var_name(int idx) const {
    if (has_aux) {
        if (idx == 0) return "t";
        --idx;
    }
    if (idx < n) return "x" + std::to_string(idx + 1);
    return "y" + std::to_string(idx - n + 1);
}

void Monomial::set_exp(int i, int v) {
    if (v < 0 || v > 255) throw std::invalid_argument("exponent out of range");
    deg_ += static_cast<unsigned>(v) - e_[static_cast<size_t>(i)];
    e_[static_cast<size_t>(i)] = static_cast<uint8_t>(v);
}

bool Monomial::squarefree() const {
    for (int i = 0; i < nvars_; ++i)
        if (e_[static_cast<size_t>(i)] > 1) return false;
    return true;
}

bool Monomial::divides(const Monomial& m) const {
    return active_ops().divides(e_.data(), m.e_.data(), e_.size());
}

bool Monomial::coprime_with(const Monomial& m) const {
    return active_ops().disjoint(e_.data(), m.e_.data(), e_.size());
}

Monomial Monomial::operator*(const Monomial& m) const {
    Monomial out(nvars_);
    active_ops().add(e_.data(), m.e_.data(), out.e_.data(), e_.size());
    out.deg_ = deg_ + m.deg_;
    return out;
}

Monomial Monomial::operator/(const Monomial& m) const {
    Monomial out(nvars_);
    active_ops().sub(e_.data(), m.e_.data(), out.e_.data(), e_.size());
    out.deg_ = deg_ - m.deg_;
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial out(a.nvars_);
    active_ops().max(a.e_.data(), b.e_.data(), out.e_.data(), a.e_.size());
    out.deg_ = active_ops().degree(out.e_.data(), out.e_.size());
    return out;
}

int Monomial::cmp(const Monomial& m) const {
    return active_ops().lex_cmp(e_.data(), m.e_.data(), e_.size());
}

std::string Monomial::to_string(const RingSpec& ring) const {
    if (is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < nvars_; ++i) {
        int e = exp(i);
        if (!e) continue;
        if (!first) out << "*";
        out << ring.var_name(i);
        if (e > 1) out << "^" << e;
        first = false;
    }
    return out.str();
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono > b.mono; });
    MultiPoly out(nvars);
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
            out.terms_.back().coeff += t.coeff;
            if (out.terms_.back().coeff == 0) out.terms_.pop_back();
        } else {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

MultiPoly MultiPoly::monomial(int nvars, const Monomial& m, const mpq_class& c) {
    MultiPoly out(nvars);
    if (c != 0) out.terms_.push_back({m, c});
    return out;
}

MultiPoly MultiPoly::constant(int nvars, const mpq_class& c) {
    return monomial(nvars, Monomial(nvars), c);
}

unsigned MultiPoly::degree() const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool MultiPoly::is_homogeneous() const {
    for (const Term& t : terms_)
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out(nvars_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = terms_[i].mono.cmp(o.terms_[j].mono);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            mpq_class s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) out.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + o.scaled(-1); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) acc.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return from_terms(nvars_, std::move(acc));
}

MultiPoly MultiPoly::scaled(const mpq_class& c) const {
    MultiPoly out(nvars_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
    return out;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m) const {
    MultiPoly out(nvars_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.mono * m, t.coeff});
    return out;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / terms_.front().coeff);
}

void MultiPoly::add_scaled(const mpq_class& c, const Monomial& m, const MultiPoly& g) {
    MultiPoly shifted = g.times_monomial(m).scaled(c);
    *this = *this + shifted;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

std::string MultiPoly::to_string(const RingSpec& ring) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
        mpq_class c = t.coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (t.mono.is_one()) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str() << "*";
            out << t.mono.to_string(ring);
        }
        first = false;
    }
    return out.str();
}

Monomial var_monomial(const RingSpec& ring, int var_index) {
    Monomial m(ring.vars());
    m.set_exp(var_index, 1);
    return m;
}

MultiPoly var_poly(const RingSpec& ring, int var_index) {
    return MultiPoly::monomial(ring.vars(), var_monomial(ring, var_index));
}

MultiPoly two_minor(const RingSpec& ring, int i, int j) {
    if (i >= j) throw std::invalid_argument("two_minor needs i < j");
    Monomial a(ring.vars()), b(ring.vars());
    a.set_exp(ring.x_index(i), 1);
    a.set_exp(ring.y_index(j), 1);
    b.set_exp(ring.x_index(j), 1);
    b.set_exp(ring.y_index(i), 1);
    return MultiPoly::from_terms(ring.vars(), {{a, 1}, {b, -1}});
}

MultiPoly lift_to_aux(const RingSpec& base, const MultiPoly& f) {
    RingSpec ext{base.n, true};
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (const Term& t : f.terms()) {
        Monomial m(ext.vars());
        for (int i = 0; i < base.vars(); ++i) m.set_exp(i + 1, t.mono.exp(i));
        terms.push_back({std::move(m), t.coeff});
    }
    return MultiPoly::from_terms(ext.vars(), std::move(terms));
}

MultiPoly drop_aux(const RingSpec& base, const MultiPoly& f) {
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (const Term& t : f.terms()) {
        if (t.mono.exp(0) != 0) throw std::logic_error("drop_aux: polynomial uses t");
        Monomial m(base.vars());
        for (int i = 0; i < base.vars(); ++i) m.set_exp(i, t.mono.exp(i + 1));
        terms.push_back({std::move(m), t.coeff});
    }
    return MultiPoly::from_terms(base.vars(), std::move(terms));
}

bool uses_aux(const MultiPoly& f) {
    for (const Term& t : f.terms())
        if (t.mono.exp(0) != 0) return true;
    return false;
}

}  // namespace beilab
