#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace beilab {

// Fixed-width 128-bit set. Graphs are capped at 64 vertices, but the
// bipartite doubling used for initial graphs lives on 2n vertices, so the
// set type carries the extra word.
struct BitSet {
    uint64_t lo = 0;
    uint64_t hi = 0;

    static constexpr int capacity = 128;

    constexpr BitSet() = default;
    constexpr BitSet(uint64_t lo_, uint64_t hi_) : lo(lo_), hi(hi_) {}

    static constexpr BitSet single(int i) {
        BitSet b;
        b.set(i);
        return b;
    }

    // Set {0, 1, ..., n-1}.
    static constexpr BitSet first_n(int n) {
        BitSet b;
        if (n >= 128) {
            b.lo = ~0ull;
            b.hi = ~0ull;
        } else if (n > 64) {
            b.lo = ~0ull;
            b.hi = (1ull << (n - 64)) - 1;
        } else if (n == 64) {
            b.lo = ~0ull;
        } else if (n > 0) {
            b.lo = (1ull << n) - 1;
        }
        return b;
    }

    constexpr bool test(int i) const {
        return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1;
    }
    constexpr void set(int i) {
        if (i < 64)
            lo |= 1ull << i;
        else
            hi |= 1ull << (i - 64);
    }
    constexpr void reset(int i) {
        if (i < 64)
            lo &= ~(1ull << i);
        else
            hi &= ~(1ull << (i - 64));
    }

    constexpr int count() const { return std::popcount(lo) + std::popcount(hi); }
    constexpr bool any() const { return lo | hi; }
    constexpr bool none() const { return !any(); }

    // Lowest set bit, -1 when empty.
    constexpr int first() const {
        if (lo) return std::countr_zero(lo);
        if (hi) return 64 + std::countr_zero(hi);
        return -1;
    }
    // Lowest set bit strictly above i, -1 when none.
    constexpr int next(int i) const {
        int j = i + 1;
        if (j >= 128) return -1;
        if (j < 64) {
            uint64_t m = lo & (~0ull << j);
            if (m) return std::countr_zero(m);
            if (hi) return 64 + std::countr_zero(hi);
            return -1;
        }
        uint64_t m = j == 64 ? hi : hi & (~0ull << (j - 64));
        return m ? 64 + std::countr_zero(m) : -1;
    }

    constexpr bool subset_of(const BitSet& o) const {
        return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0;
    }
    constexpr bool intersects(const BitSet& o) const {
        return (lo & o.lo) | (hi & o.hi);
    }

    friend constexpr BitSet operator&(BitSet a, BitSet b) { return {a.lo & b.lo, a.hi & b.hi}; }
    friend constexpr BitSet operator|(BitSet a, BitSet b) { return {a.lo | b.lo, a.hi | b.hi}; }
    friend constexpr BitSet operator^(BitSet a, BitSet b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
    BitSet& operator&=(BitSet b) { lo &= b.lo; hi &= b.hi; return *this; }
    BitSet& operator|=(BitSet b) { lo |= b.lo; hi |= b.hi; return *this; }
    // Set difference.
    friend constexpr BitSet operator-(BitSet a, BitSet b) { return {a.lo & ~b.lo, a.hi & ~b.hi}; }

    friend constexpr bool operator==(BitSet a, BitSet b) { return a.lo == b.lo && a.hi == b.hi; }
    friend constexpr bool operator!=(BitSet a, BitSet b) { return !(a == b); }
    // Numeric order; used only for deterministic tie-breaking.
    friend constexpr bool operator<(BitSet a, BitSet b) {
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int v = first(); v >= 0; v = next(v)) f(v);
    }
};

}  // namespace beilab
