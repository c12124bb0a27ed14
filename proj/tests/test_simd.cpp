#include <doctest.h>

#include <bit>
#include <random>
#include <vector>

#include "duadic/bitvec.hpp"
#include "duadic/simd.hpp"

using namespace duadic;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint64_t> w(n);
    for (auto& x : w) {
        x = rng();
        if (rng() % 4 == 0) x &= rng();  // sparser words
    }
    return w;
}

std::uint64_t ref_popcount(const std::vector<std::uint64_t>& a) {
    std::uint64_t c = 0;
    for (auto x : a) c += static_cast<std::uint64_t>(std::popcount(x));
    return c;
}

}  // namespace

TEST_CASE("scalar kernel set is always available and listed first") {
    const auto sets = simd::available_kernels();
    REQUIRE(!sets.empty());
    CHECK(sets.front()->isa == simd::Isa::scalar);
    CHECK(simd::isa_name(simd::Isa::avx2) == "avx2");
}

TEST_CASE("every kernel set matches the scalar reference") {
    std::mt19937_64 rng(42);
    const auto& ref = simd::scalar_kernels();
    for (const auto* k : simd::available_kernels()) {
        CAPTURE(k->name);
        for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 100, 257}) {
            CAPTURE(n);
            for (int rep = 0; rep < 8; ++rep) {
                auto a = random_words(rng, n), b = random_words(rng, n);
                if (rep == 0) b = a;
                CHECK(k->popcount(a.data(), n) == ref_popcount(a));
                CHECK(k->popcount(a.data(), n) == ref.popcount(a.data(), n));
                CHECK(k->and_popcount(a.data(), b.data(), n) == ref.and_popcount(a.data(), b.data(), n));
                CHECK(k->xor_popcount(a.data(), b.data(), n) == ref.xor_popcount(a.data(), b.data(), n));
                CHECK(k->andnot_any(a.data(), b.data(), n) == ref.andnot_any(a.data(), b.data(), n));
                auto sub = a;
                for (std::size_t i = 0; i < n; ++i) sub[i] &= b[i];
                CHECK_FALSE(k->andnot_any(sub.data(), b.data(), n));

                auto x1 = a, x2 = a;
                k->xor_into(x1.data(), b.data(), n);
                ref.xor_into(x2.data(), b.data(), n);
                CHECK(x1 == x2);
                auto y1 = a, y2 = a;
                const auto c1 = k->xor_into_popcount(y1.data(), b.data(), n);
                const auto c2 = ref.xor_into_popcount(y2.data(), b.data(), n);
                CHECK(y1 == y2);
                CHECK(c1 == c2);
                CHECK(c1 == ref_popcount(y1));
            }
        }
    }
}

TEST_CASE("kernels tolerate unaligned spans") {
    std::mt19937_64 rng(7);
    auto buf = random_words(rng, 40), other = random_words(rng, 40);
    const auto& ref = simd::scalar_kernels();
    for (const auto* k : simd::available_kernels())
        for (std::size_t off = 0; off < 4; ++off) {
            CHECK(k->popcount(buf.data() + off, 33) == ref.popcount(buf.data() + off, 33));
            CHECK(k->xor_popcount(buf.data() + off, other.data() + 1, 33) ==
                  ref.xor_popcount(buf.data() + off, other.data() + 1, 33));
        }
}

TEST_CASE("select switches the active kernel set") {
    const simd::Isa before = simd::active().isa;
    CHECK(simd::select(simd::Isa::scalar));
    CHECK(simd::active().isa == simd::Isa::scalar);
    for (const auto* k : simd::available_kernels()) CHECK(simd::select(k->isa));
    CHECK(simd::select(before));
}

TEST_CASE("BitVec basics") {
    BitVec v(130);
    CHECK(v.none());
    v.set(0);
    v.set(64);
    v.set(129);
    CHECK(v.count() == 3);
    CHECK(v.indices() == std::vector<std::size_t>{0, 64, 129});
    CHECK(v.find_first() == 0);
    CHECK(v.find_next(1) == 64);
    CHECK(v.find_last() == 129);
    v.flip(64);
    CHECK_FALSE(v.test(64));
    CHECK(v.to_hex() == "0x200000000000000000000000000000001");
    CHECK(BitVec::from_hex(v.to_hex(), 130) == v);
    CHECK_THROWS(BitVec::from_hex("0x4", 2));

    BitVec full(70);
    full.fill();
    CHECK(full.count() == 70);
    CHECK(v.is_subset_of(BitVec(130)) == false);
    BitVec w(130);
    w.set(0);
    CHECK(w.is_subset_of(v));
    CHECK((v ^ w).count() == 1);
    CHECK(and_count(v, w) == 1);
    CHECK(BitVec(5).to_hex() == "0x0");
}
