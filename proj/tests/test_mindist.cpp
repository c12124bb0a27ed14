#include <doctest.h>

#include <cstdlib>
#include <memory>
#include <random>

#include "duadic/duadic.hpp"
#include "duadic/mindist.hpp"
#include "duadic/simd.hpp"
#include "oracles.hpp"

using namespace duadic;

namespace {

std::shared_ptr<const FieldGF2m> field(unsigned m) { return std::make_shared<const FieldGF2m>(m); }

CyclicCode code_for(unsigned r, unsigned m, std::vector<unsigned> S) {
    return CyclicCode::from_defining_set(field(m), defining_set(WeightClassSpec::make(r, m, std::move(S))));
}

std::vector<oracle::Word> rows_of(const GeneratorMatrix& G) {
    std::vector<oracle::Word> rows;
    for (const auto& r : G.rows()) {
        oracle::Word w(G.length(), 0);
        for (auto i : r.indices()) w[i] = 1;
        rows.push_back(w);
    }
    return rows;
}

struct ThreadCap {
    explicit ThreadCap(const char* value) { setenv("DUADIC_THREADS", value, 1); }
    ~ThreadCap() { unsetenv("DUADIC_THREADS"); }
};

}  // namespace

TEST_CASE("frozen small-code distances") {
    // values below were produced by the plain-counting oracle
    const auto hamming = code_for(2, 3, {1});
    const auto b = exact_min_distance(hamming);
    CHECK(b.exact);
    CHECK(b.lower == 3);
    CHECK(b.upper == 3);
    CHECK(b.witness.count() == 3);
    CHECK(b.min_odd_weight == 3u);

    const auto c31 = code_for(2, 5, {1});
    const auto d31 = exact_min_distance(c31);
    CHECK(d31.upper == 7);
    CHECK(d31.min_odd_weight == 7u);
    CHECK(exact_min_distance(dual(c31)).upper == 8);
    CHECK_FALSE(exact_min_distance(dual(c31)).min_odd_weight.has_value());
    CHECK(exact_min_distance(extend(c31)).upper == 8);

    const auto dist = weight_distribution(c31);
    CHECK(dist.counts[7] == 155);
    CHECK(dist.counts[8] == 465);
    const auto ext = weight_distribution(extend(c31));
    CHECK(ext.counts[8] == 620);
    CHECK(ext.counts[12] == 13888);
    CHECK(ext.counts[16] == 36518);
    CHECK(ext.doubly_even());
    CHECK(weight_distribution(dual(c31)).all_even());
    CHECK(weight_distribution(dual(c31)).counts[8] == 465);
}

TEST_CASE("[8,4] extended Hamming distribution") {
    const auto e = extend(code_for(2, 3, {1}));
    const auto dist = weight_distribution(e);
    CHECK(dist.counts == std::vector<std::uint64_t>{1, 0, 0, 0, 14, 0, 0, 0, 1});
    CHECK(dist.total() == 16);
    CHECK(dist.doubly_even());
}

TEST_CASE("repetition code and full space") {
    const auto rep = CyclicCode::from_defining_set(field(3), DefiningSet::nonzero(7));
    CHECK(rep.dimension() == 1);
    CHECK(exact_min_distance(rep).upper == 7);
    const auto full = CyclicCode::from_defining_set(field(3), DefiningSet(7));
    CHECK(full.dimension() == 7);
    const auto dist = weight_distribution(full);
    for (unsigned w = 0; w <= 7; ++w) CHECK(dist.counts[w] == oracle::binomial(7, w));
    CHECK(exact_min_distance(full).upper == 1);
    const auto zero = CyclicCode::from_defining_set(field(3), DefiningSet::full(7));
    CHECK_THROWS_AS(exact_min_distance(zero), std::domain_error);
    CHECK_THROWS_AS(bounded_min_distance(zero), std::domain_error);
}

TEST_CASE("enumeration agrees with the plain-counting oracle") {
    for (unsigned m : {3u, 4u, 5u}) {
        const std::uint32_t n = (1u << m) - 1;
        for (const auto& c : all_cosets(n)) {
            // every code generated by a single minimal polynomial and its complement
            const std::uint32_t leader[] = {c.leader};
            for (const auto& T : {DefiningSet::from_leaders(n, leader), DefiningSet::from_leaders(n, leader).complement()}) {
                const auto code = CyclicCode::from_defining_set(field(m), T);
                if (code.dimension() == 0 || code.dimension() > 16) continue;
                const auto G = code.generator_matrix();
                const auto ref = oracle::weight_distribution(rows_of(G), n);
                CHECK(weight_distribution(code).counts == ref);
                const auto mw = oracle::min_weights(rows_of(G), n);
                const auto b = exact_min_distance(code);
                CHECK(b.upper == mw.d);
                CHECK(b.min_odd_weight.value_or(0) == mw.min_odd);
            }
        }
    }
}

TEST_CASE("budget boundary is a hard error") {
    const auto c = code_for(2, 7, {1});  // k = 64
    CHECK_THROWS_AS(exact_min_distance(c), BudgetExceeded);
    CHECK_THROWS_AS(weight_distribution(c), BudgetExceeded);
}

TEST_CASE("duadic pairs share their minimum distance") {
    for (unsigned m : {3u, 5u})
        for (unsigned r : {2u, 4u, 6u})
            for (const auto& S : enumerate_catalog(r, m % r)) {
                const auto spec = WeightClassSpec::make(r, m, S);
                const auto a = CyclicCode::from_defining_set(field(m), defining_set(spec));
                const auto b = CyclicCode::from_defining_set(field(m), defining_set(complement_spec(spec)));
                CHECK(exact_min_distance(a).upper == exact_min_distance(b).upper);
            }
}

TEST_CASE("dual distance is the minimum even weight of the odd-like code") {
    const auto c = code_for(2, 5, {1});
    const auto dist = weight_distribution(c);
    std::size_t min_even = 0;
    for (std::size_t w = 2; w < dist.counts.size() && !min_even; w += 2)
        if (dist.counts[w]) min_even = w;
    const auto dd = exact_min_distance(dual(c)).upper;
    CHECK(dd == min_even);
    CHECK(dd >= exact_min_distance(c).upper);
}

TEST_CASE("bounded search brackets the exact value") {
    for (unsigned m : {3u, 5u})
        for (unsigned r : {2u, 4u, 6u, 8u})
            for (const auto& S : enumerate_catalog(r, m % r)) {
                const auto c = code_for(r, m, S);
                for (const CyclicCode& code : {c, dual(c)}) {
                    const auto exact = exact_min_distance(code).upper;
                    const auto b = bounded_min_distance(code, {5, 3, {}});
                    CHECK(b.lower <= exact);
                    CHECK(exact <= b.upper);
                    CHECK(b.witness.count() == b.upper);
                    CHECK(code.contains(b.witness));
                    CHECK(b.exact == (b.lower == b.upper));
                    REQUIRE(b.certificate.has_value());
                }
                const auto e = extend(c);
                const auto be = bounded_min_distance(e, {5, 3, {}});
                const auto exact = exact_min_distance(e).upper;
                CHECK(be.lower <= exact);
                CHECK(exact <= be.upper);
            }
}

TEST_CASE("effort 0 returns the generator weight") {
    const auto c = code_for(8, 9, {0, 2, 3, 4});
    const auto b = bounded_min_distance(c, {0, 1, {}});
    CHECK(b.upper == c.generator().weight());
    CHECK(b.lower == 19);
    const auto e = bounded_min_distance(extend(c), {0, 1, {}});
    CHECK(e.upper == extend(c).extended_generator().count());
    CHECK(e.lower == 20);
}

TEST_CASE("[127,64] bounded search") {
    const auto c = code_for(2, 7, {1});
    const auto b = bounded_min_distance(c, {20, 1, {}});
    CHECK(b.lower == 9);
    CHECK(b.upper >= 9);
    CHECK(c.contains(b.witness));
    const auto again = bounded_min_distance(c, {20, 1, {}});
    CHECK(again.upper == b.upper);
    CHECK(again.witness == b.witness);
}

TEST_CASE("results do not depend on the worker count") {
    const auto c = code_for(2, 5, {1});
    const auto big = code_for(4, 7, {0, 1});
    const auto ref_exact = exact_min_distance(c);
    const auto ref_dist = weight_distribution(extend(c));
    const auto ref_bound = bounded_min_distance(big, {4, 9, {}});
    for (const char* threads : {"1", "2", "3", "8"}) {
        ThreadCap cap(threads);
        const auto b = exact_min_distance(c);
        CHECK(b.witness == ref_exact.witness);
        CHECK(b.min_odd_weight == ref_exact.min_odd_weight);
        CHECK(weight_distribution(extend(c)).counts == ref_dist.counts);
        const auto bb = bounded_min_distance(big, {4, 9, {}});
        CHECK(bb.upper == ref_bound.upper);
        CHECK(bb.witness == ref_bound.witness);
    }
}

TEST_CASE("results do not depend on the kernel set") {
    const auto c = code_for(2, 5, {1});
    const auto big = code_for(2, 7, {1});
    const simd::Isa before = simd::active().isa;
    std::vector<std::uint64_t> uppers;
    std::vector<std::vector<std::uint64_t>> dists;
    for (const auto* k : simd::available_kernels()) {
        simd::select(k->isa);
        dists.push_back(weight_distribution(c).counts);
        uppers.push_back(bounded_min_distance(big, {3, 2, {}}).upper);
    }
    simd::select(before);
    for (std::size_t i = 1; i < dists.size(); ++i) {
        CHECK(dists[i] == dists[0]);
        CHECK(uppers[i] == uppers[0]);
    }
}
