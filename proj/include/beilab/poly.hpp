#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "beilab/expvec.hpp"

namespace beilab {

// Polynomial ring K[x_1..x_n, y_1..y_n] over Q, pure lexicographic order with
// x_1 > ... > x_n > y_1 > ... > y_n. Intersections extend the ring by one
// auxiliary variable t that is greater than everything else.
struct RingSpec {
    int n = 0;
    bool has_aux = false;

    int vars() const { return 2 * n + (has_aux ? 1 : 0); }
    int x_index(int i) const { return (has_aux ? 1 : 0) + i; }          // 0-based vertex
    int y_index(int i) const { return (has_aux ? 1 : 0) + n + i; }      // 0-based vertex
    int aux_index() const { return 0; }
    std::string var_name(int idx) const;

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.n == b.n && a.has_aux == b.has_aux;
    }
};

// Dense exponent vector, padded to a 32-byte multiple for the kernels.
// Index 0 is the greatest variable, so byte-wise lexicographic comparison is
// the monomial order.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : nvars_(nvars), e_(padded(nvars), 0) {}

    static size_t padded(int nvars) { return (static_cast<size_t>(nvars) + 31) & ~size_t(31); }

    int nvars() const { return nvars_; }
    int exp(int i) const { return e_[static_cast<size_t>(i)]; }
    void set_exp(int i, int v);
    unsigned degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }
    bool squarefree() const;

    bool divides(const Monomial& m) const;
    bool coprime_with(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    // Exact quotient; requires m.divides(*this).
    Monomial operator/(const Monomial& m) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    int cmp(const Monomial& m) const;  // lex: -1 smaller, 0 equal, +1 greater
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.cmp(b) != 0; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.cmp(b) < 0; }
    friend bool operator>(const Monomial& a, const Monomial& b) { return a.cmp(b) > 0; }

    const uint8_t* data() const { return e_.data(); }
    size_t padded_size() const { return e_.size(); }

    std::string to_string(const RingSpec& ring) const;

private:
    int nvars_ = 0;
    unsigned deg_ = 0;
    std::vector<uint8_t> e_;
};

struct Term {
    Monomial mono;
    mpq_class coeff;
};

// Sparse polynomial: terms strictly descending in the monomial order, no zero
// coefficients.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    static MultiPoly from_terms(int nvars, std::vector<Term> terms);  // sorts and merges
    static MultiPoly monomial(int nvars, const Monomial& m, const mpq_class& c = 1);
    static MultiPoly constant(int nvars, const mpq_class& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }

    unsigned degree() const;  // max term degree; 0 for the zero polynomial
    bool is_homogeneous() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const mpq_class& c) const;
    MultiPoly times_monomial(const Monomial& m) const;
    MultiPoly monic() const;  // divide by the leading coefficient

    // *this += c * m * g. When c*m*LT(g) cancels the term at some position,
    // every earlier term keeps its value, so division loops can keep their
    // scan index.
    void add_scaled(const mpq_class& c, const Monomial& m, const MultiPoly& g);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    std::string to_string(const RingSpec& ring) const;

private:
    int nvars_ = 0;
    std::vector<Term> terms_;
};

// Variable products used throughout: x_i, y_i, and the 2-minor
// f_ij = x_i y_j - x_j y_i for i < j (0-based vertex indices).
MultiPoly var_poly(const RingSpec& ring, int var_index);
Monomial var_monomial(const RingSpec& ring, int var_index);
MultiPoly two_minor(const RingSpec& ring, int i, int j);

// Lift into / project out of the aux-extended ring.
MultiPoly lift_to_aux(const RingSpec& base, const MultiPoly& f);
MultiPoly drop_aux(const RingSpec& base, const MultiPoly& f);
bool uses_aux(const MultiPoly& f);

}  // namespace beilab
