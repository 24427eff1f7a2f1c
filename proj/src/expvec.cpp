#include "beilab/expvec.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

#if defined(__x86_64__) || defined(__i386__)
#define BEILAB_X86 1
#include <immintrin.h>
#else
#define BEILAB_X86 0
#endif

namespace beilab::expkern {

namespace {

// ---- scalar reference ----

bool sc_divides(const uint8_t* a, const uint8_t* b, size_t len) {
    for (size_t i = 0; i < len; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

void sc_add(const uint8_t* a, const uint8_t* b, uint8_t* out, size_t len) {
    for (size_t i = 0; i < len; ++i) out[i] = static_cast<uint8_t>(a[i] + b[i]);
}

void sc_sub(const uint8_t* a, const uint8_t* b, uint8_t* out, size_t len) {
    for (size_t i = 0; i < len; ++i) out[i] = static_cast<uint8_t>(a[i] - b[i]);
}

void sc_max(const uint8_t* a, const uint8_t* b, uint8_t* out, size_t len) {
    for (size_t i = 0; i < len; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

bool sc_disjoint(const uint8_t* a, const uint8_t* b, size_t len) {
    for (size_t i = 0; i < len; ++i)
        if (a[i] && b[i]) return false;
    return true;
}

int sc_lex_cmp(const uint8_t* a, const uint8_t* b, size_t len) {
    for (size_t i = 0; i < len; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

unsigned sc_degree(const uint8_t* a, size_t len) {
    unsigned d = 0;
    for (size_t i = 0; i < len; ++i) d += a[i];
    return d;
}

constexpr Ops kScalar = {sc_divides, sc_add, sc_sub, sc_max,
                         sc_disjoint, sc_lex_cmp, sc_degree, "scalar"};

#if BEILAB_X86

// ---- AVX2 ----

__attribute__((target("avx2"))) bool av_divides(const uint8_t* a, const uint8_t* b, size_t len) {
    for (size_t i = 0; i < len; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // saturating a-b is nonzero exactly where a > b
        __m256i over = _mm256_subs_epu8(va, vb);
        if (!_mm256_testz_si256(over, over)) return false;
    }
    return true;
}

__attribute__((target("avx2"))) void av_add(const uint8_t* a, const uint8_t* b, uint8_t* out,
                                            size_t len) {
    for (size_t i = 0; i < len; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_add_epi8(va, vb));
    }
}

__attribute__((target("avx2"))) void av_sub(const uint8_t* a, const uint8_t* b, uint8_t* out,
                                            size_t len) {
    for (size_t i = 0; i < len; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_sub_epi8(va, vb));
    }
}

__attribute__((target("avx2"))) void av_max(const uint8_t* a, const uint8_t* b, uint8_t* out,
                                            size_t len) {
    for (size_t i = 0; i < len; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_max_epu8(va, vb));
    }
}

__attribute__((target("avx2"))) bool av_disjoint(const uint8_t* a, const uint8_t* b, size_t len) {
    for (size_t i = 0; i < len; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i mn = _mm256_min_epu8(va, vb);
        if (!_mm256_testz_si256(mn, mn)) return false;
    }
    return true;
}

__attribute__((target("avx2"))) int av_lex_cmp(const uint8_t* a, const uint8_t* b, size_t len) {
    for (size_t i = 0; i < len; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        uint32_t eq = static_cast<uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
        if (eq != 0xffffffffu) {
            size_t j = i + static_cast<size_t>(__builtin_ctz(~eq));
            return a[j] < b[j] ? -1 : 1;
        }
    }
    return 0;
}

__attribute__((target("avx2"))) unsigned av_degree(const uint8_t* a, size_t len) {
    __m256i acc = _mm256_setzero_si256();
    for (size_t i = 0; i < len; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(va, _mm256_setzero_si256()));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<unsigned>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

constexpr Ops kAvx2 = {av_divides, av_add, av_sub, av_max,
                       av_disjoint, av_lex_cmp, av_degree, "avx2"};

#endif  // BEILAB_X86

const Ops& pick_ops() {
    if (const char* env = std::getenv("BEILAB_KERNEL")) {
        std::string want(env);
        if (want == "scalar") return kScalar;
#if BEILAB_X86
        if (want == "avx2" && avx2_supported()) return kAvx2;
#endif
    }
#if BEILAB_X86
    if (avx2_supported()) return kAvx2;
#endif
    return kScalar;
}

}  // namespace

const Ops& scalar_ops() { return kScalar; }

bool avx2_supported() {
#if BEILAB_X86
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Ops& avx2_ops() {
#if BEILAB_X86
    return kAvx2;
#else
    return kScalar;
#endif
}

const Ops& active_ops() {
    static const Ops& ops = pick_ops();
    return ops;
}

}  // namespace beilab::expkern
