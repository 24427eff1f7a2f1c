#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "beilab/poly.hpp"

namespace beilab {

// Remainder of multivariate division. Deterministic: the greatest reducible
// term is always cancelled against the first basis element whose leading
// term divides it.
MultiPoly normal_form(MultiPoly f, std::span<const MultiPoly> basis);

// Reduced monic lexicographic Groebner basis, sorted by leading monomial
// descending. Normal pair selection (least lcm degree, ties by lcm order),
// coprime and chain pair criteria.
std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens);

// Every S-polynomial reduces to zero against the given set.
bool is_groebner(std::span<const MultiPoly> gens);

// Generator list plus a lazily computed, memoized reduced Groebner basis.
// Immutable after construction; copies share the cache.
class IdealHandle {
public:
    IdealHandle() = default;
    IdealHandle(RingSpec ring, std::vector<MultiPoly> gens);
    // For results whose generators are already a reduced basis (elimination
    // outputs); skips the recomputation.
    static IdealHandle with_known_gb(RingSpec ring, std::vector<MultiPoly> gb);

    const RingSpec& ring() const { return ring_; }
    const std::vector<MultiPoly>& generators() const { return gens_; }
    const std::vector<MultiPoly>& gb() const;

    bool is_zero_ideal() const { return gb().empty(); }
    bool is_unit_ideal() const;
    bool contains(const MultiPoly& f) const;

private:
    struct Cache {
        std::once_flag flag;
        std::vector<MultiPoly> gb;
    };
    RingSpec ring_{};
    std::vector<MultiPoly> gens_;
    std::shared_ptr<Cache> cache_;
    bool gb_known_ = false;
};

// Equality of reduced Groebner bases (ideal equality).
bool ideal_equal(const IdealHandle& a, const IdealHandle& b);

}  // namespace beilab
