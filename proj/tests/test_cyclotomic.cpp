#include <doctest.h>

#include <random>

#include "duadic/cyclotomic.hpp"
#include "oracles.hpp"

using namespace duadic;

TEST_CASE("cosets match the orbit oracle and partition Z_n") {
    for (unsigned m = 2; m <= 12; ++m) {
        const std::uint32_t n = (1u << m) - 1;
        const auto cosets = all_cosets(n);
        std::size_t covered = 0;
        for (const auto& c : cosets) {
            const auto ref = oracle::coset(c.leader, n);
            CHECK(std::vector<std::uint32_t>(ref.begin(), ref.end()) == c.elements);
            CHECK(c.leader == *ref.begin());
            CHECK(m % c.size() == 0);
            covered += c.size();
        }
        CHECK(covered == n);
    }
    CHECK(coset(3, 7).elements == std::vector<std::uint32_t>{3, 5, 6});
    CHECK_THROWS_AS(coset(7, 7), std::invalid_argument);
    CHECK_THROWS_AS(coset(1, 8), std::invalid_argument);
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(3, 7) == 5u);
    CHECK(mod_inverse(15, 511) .has_value());
    CHECK((*mod_inverse(15, 511) * 15) % 511 == 1);
    CHECK_FALSE(mod_inverse(7, 511).has_value());
}

TEST_CASE("WeightClassSpec validation") {
    CHECK_NOTHROW(WeightClassSpec::make(8, 9, {4, 0, 3, 2}));
    CHECK(WeightClassSpec::make(8, 9, {4, 0, 3, 2}).residues() == std::vector<unsigned>{0, 2, 3, 4});
    CHECK(WeightClassSpec::make(8, 9, {0, 2, 3, 4}).residues_string() == "0,2,3,4");
    CHECK(WeightClassSpec::make(8, 11, {0, 1, 5, 7}).t() == 3);
    CHECK_THROWS_AS(WeightClassSpec::make(3, 9, {0}), std::invalid_argument);       // odd r
    CHECK_THROWS_AS(WeightClassSpec::make(8, 10, {0, 1, 2, 3}), std::invalid_argument);  // even m
    CHECK_THROWS_AS(WeightClassSpec::make(8, 9, {0, 1, 2}), std::invalid_argument);  // |S| != r/2
    CHECK_THROWS_AS(WeightClassSpec::make(8, 9, {0, 1, 2, 8}), std::invalid_argument);  // residue >= r
    CHECK_THROWS_AS(WeightClassSpec::make(4, 9, {1, 1}), std::invalid_argument);       // duplicate
    CHECK_THROWS_AS(WeightClassSpec::make(2, 21, {1}), std::invalid_argument);
    CHECK_NOTHROW(WeightClassSpec::unchecked(3, 4, {1}));
    CHECK_FALSE(WeightClassSpec::unchecked(3, 4, {1}).checked());
}

TEST_CASE("defining sets equal the direct weight-class definition") {
    std::mt19937 rng(5);
    for (unsigned m = 3; m <= 13; m += 2)
        for (unsigned r : {2u, 4u, 6u, 8u}) {
            std::vector<unsigned> all(r);
            std::iota(all.begin(), all.end(), 0u);
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<unsigned> S(all.begin(), all.begin() + r / 2);
            const auto spec = WeightClassSpec::make(r, m, S);
            const auto T = defining_set(spec);
            const auto ref = oracle::weight_class_set(r, m, spec.residues());
            CHECK(T.members() == std::vector<std::uint32_t>(ref.begin(), ref.end()));
            CHECK_FALSE(T.contains(0));
        }
}

TEST_CASE("weight classes are closed under doubling for every m <= 17") {
    // doubling is a cyclic rotation of the m-bit word, so w2 is invariant
    for (unsigned m = 3; m <= 17; m += 2) {
        const std::uint32_t n = (1u << m) - 1;
        for (std::uint32_t j = 1; j < n; ++j) {
            const std::uint32_t d = static_cast<std::uint32_t>((2ull * j) % n);
            REQUIRE(weight2(d) == weight2(j));
        }
        for (unsigned r : {2u, 4u, 6u, 8u}) {
            std::vector<unsigned> S;
            for (unsigned s = 0; s < r; s += 2) S.push_back(s);
            CHECK(defining_set(WeightClassSpec::make(r, m, S)).closed_under_doubling());
        }
    }
}

TEST_CASE("DefiningSet algebra") {
    const std::uint32_t n = 31;
    const std::uint32_t leaders[] = {1, 5};
    const auto T = DefiningSet::from_leaders(n, leaders);
    CHECK(T.size() == 10);
    CHECK(T.leaders() == std::vector<std::uint32_t>{1, 5});
    CHECK(T.closed_under_doubling());
    CHECK(T.negated().negated() == T);
    CHECK(T.complement().complement() == T);
    CHECK(T.disjoint_from(T.complement()));
    CHECK(T.united(T.complement()) == DefiningSet::full(n));
    CHECK(T.with_zero().size() == 11);
    CHECK(T.with_zero().without_zero() == T);
    CHECK(T.scaled(2) == T);
    CHECK(DefiningSet::nonzero(n).size() == 30);
    const std::uint32_t bad[] = {3};
    CHECK_FALSE(DefiningSet::from_members(n, bad).closed_under_doubling());
}

TEST_CASE("complement_spec swaps S for Z_r minus S") {
    const auto spec = WeightClassSpec::make(8, 9, {0, 2, 3, 4});
    const auto c = complement_spec(spec);
    CHECK(c.residues() == std::vector<unsigned>{1, 5, 6, 7});
    CHECK(defining_set(spec).disjoint_from(defining_set(c)));
    CHECK(defining_set(spec).united(defining_set(c)) == DefiningSet::nonzero(511));
}
