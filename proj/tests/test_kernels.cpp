#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "beilab/expvec.hpp"

using namespace beilab::expkern;

namespace {

std::vector<uint8_t> random_vec(size_t len, std::mt19937_64& rng, int max_val) {
    std::vector<uint8_t> v(len);
    for (auto& x : v) x = static_cast<uint8_t>(rng() % static_cast<uint64_t>(max_val + 1));
    return v;
}

}  // namespace

TEST_CASE("scalar kernels behave on frozen vectors") {
    const Ops& ops = scalar_ops();
    std::vector<uint8_t> a(32, 0), b(32, 0), out(32, 0);
    a[0] = 2;
    a[5] = 1;
    b[0] = 2;
    b[5] = 3;
    b[7] = 4;
    CHECK(ops.divides(a.data(), b.data(), 32));
    CHECK_FALSE(ops.divides(b.data(), a.data(), 32));
    ops.add(a.data(), b.data(), out.data(), 32);
    CHECK(out[0] == 4);
    CHECK(out[5] == 4);
    CHECK(out[7] == 4);
    ops.sub(b.data(), a.data(), out.data(), 32);
    CHECK(out[0] == 0);
    CHECK(out[5] == 2);
    ops.max(a.data(), b.data(), out.data(), 32);
    CHECK(out[5] == 3);
    CHECK_FALSE(ops.disjoint(a.data(), b.data(), 32));
    CHECK(ops.lex_cmp(a.data(), b.data(), 32) == -1);  // differs first at index 5
    CHECK(ops.lex_cmp(a.data(), a.data(), 32) == 0);
    CHECK(ops.degree(b.data(), 32) == 9);
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    if (!avx2_supported()) return;
    const Ops& sc = scalar_ops();
    const Ops& av = avx2_ops();
    std::mt19937_64 rng(12345);
    for (size_t len : {size_t(32), size_t(64), size_t(160)}) {
        for (int iter = 0; iter < 500; ++iter) {
            // small values exercise ties, large ones exercise saturation
            int max_val = iter % 2 ? 3 : 255;
            auto a = random_vec(len, rng, max_val);
            auto b = random_vec(len, rng, max_val);
            CHECK(sc.divides(a.data(), b.data(), len) == av.divides(a.data(), b.data(), len));
            CHECK(sc.disjoint(a.data(), b.data(), len) == av.disjoint(a.data(), b.data(), len));
            CHECK(sc.lex_cmp(a.data(), b.data(), len) == av.lex_cmp(a.data(), b.data(), len));
            CHECK(sc.degree(a.data(), len) == av.degree(a.data(), len));
            std::vector<uint8_t> s1(len), s2(len);
            sc.add(a.data(), b.data(), s1.data(), len);
            av.add(a.data(), b.data(), s2.data(), len);
            CHECK(s1 == s2);
            sc.max(a.data(), b.data(), s1.data(), len);
            av.max(a.data(), b.data(), s2.data(), len);
            CHECK(s1 == s2);
            // sub on a pair ordered by max so the difference is well-defined
            sc.max(a.data(), b.data(), s1.data(), len);
            std::vector<uint8_t> d1(len), d2(len);
            sc.sub(s1.data(), a.data(), d1.data(), len);
            av.sub(s1.data(), a.data(), d2.data(), len);
            CHECK(d1 == d2);
        }
    }
}

TEST_CASE("active table resolves to a known implementation") {
    const Ops& ops = active_ops();
    CHECK((std::string(ops.name) == "scalar" || std::string(ops.name) == "avx2"));
}
