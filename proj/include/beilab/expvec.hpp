#pragma once

#include <cstddef>
#include <cstdint>

// Exponent-vector kernels.
//
// Monomials store dense uint8 exponent vectors padded to a 32-byte multiple.
// Every hot loop of the Groebner engine (divisibility tests, products, lcms,
// lex comparisons) funnels through these kernels. A scalar reference
// implementation always exists; an AVX2 variant is selected at runtime when
// the CPU supports it. The two are equivalence-tested against each other.
//
// All lengths are byte counts and must be positive multiples of 32.
// Byte 0 holds the exponent of the greatest variable, so plain left-to-right
// byte comparison realizes the lexicographic monomial order.

namespace beilab::expkern {

struct Ops {
    // a[i] <= b[i] for all i  (monomial divisibility: a | b)
    bool (*divides)(const uint8_t* a, const uint8_t* b, size_t len);
    // out = a + b  (monomial product; exponents must stay below 256)
    void (*add)(const uint8_t* a, const uint8_t* b, uint8_t* out, size_t len);
    // out = a - b, assumes b[i] <= a[i]  (exact monomial quotient)
    void (*sub)(const uint8_t* a, const uint8_t* b, uint8_t* out, size_t len);
    // out = max(a, b)  (lcm)
    void (*max)(const uint8_t* a, const uint8_t* b, uint8_t* out, size_t len);
    // min(a[i], b[i]) == 0 for all i  (coprime supports)
    bool (*disjoint)(const uint8_t* a, const uint8_t* b, size_t len);
    // -1 / 0 / +1 from the first differing byte
    int (*lex_cmp)(const uint8_t* a, const uint8_t* b, size_t len);
    // sum of bytes  (total degree)
    unsigned (*degree)(const uint8_t* a, size_t len);
    const char* name;
};

const Ops& scalar_ops();
bool avx2_supported();
const Ops& avx2_ops();  // only valid to call through when avx2_supported()

// Runtime-selected table. Honors BEILAB_KERNEL=scalar|avx2 (for testing);
// otherwise picks the widest supported variant.
const Ops& active_ops();

}  // namespace beilab::expkern
