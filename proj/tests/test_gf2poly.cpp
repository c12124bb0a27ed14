#include <doctest.h>

#include <random>

#include "duadic/cyclotomic.hpp"
#include "duadic/gf2poly.hpp"
#include "oracles.hpp"

using namespace duadic;

namespace {

oracle::Poly to_oracle(const BinaryPoly& p) {
    oracle::Poly out;
    if (auto d = p.degree())
        for (std::size_t i = 0; i <= *d; ++i) out.push_back(p.coeff(i));
    return out;
}

BinaryPoly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
    const std::size_t deg = rng() % (max_degree + 1);
    std::vector<std::size_t> e;
    for (std::size_t i = 0; i <= deg; ++i)
        if (rng() & 1u) e.push_back(i);
    return BinaryPoly::from_exponents(e);
}

}  // namespace

TEST_CASE("representation and formatting") {
    const auto p = BinaryPoly::from_exponents({3, 1, 0});
    CHECK(p.degree() == 3u);
    CHECK(p.weight() == 3);
    CHECK(p.to_string() == "x^3 + x + 1");
    CHECK(p.to_hex() == "0xB");
    CHECK(BinaryPoly::from_hex("0xB") == p);
    CHECK(BinaryPoly().is_zero());
    CHECK_FALSE(BinaryPoly().degree().has_value());
    CHECK(BinaryPoly::x_pow_plus_one(7).exponents() == std::vector<std::size_t>{0, 7});
    CHECK(p.to_bits(7).to_hex() == "0xB");
    CHECK_THROWS(p.to_bits(3));
}

TEST_CASE("multiplication and division agree with schoolbook oracles") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 300; ++rep) {
        const auto a = random_poly(rng, rep < 200 ? 90 : 400);
        auto b = random_poly(rng, rep < 200 ? 70 : 300);
        if (b.is_zero()) b = BinaryPoly::one();
        CHECK(to_oracle(a * b) == oracle::mul(to_oracle(a), to_oracle(b)));
        const auto [q, r] = poly_divmod(a, b);
        const auto [oq, orr] = oracle::divmod(to_oracle(a), to_oracle(b));
        CHECK(to_oracle(q) == oq);
        CHECK(to_oracle(r) == orr);
        CHECK(q * b + r == a);
    }
    CHECK_THROWS_AS(poly_divmod(BinaryPoly::one(), BinaryPoly()), std::domain_error);
}

TEST_CASE("reciprocal and check polynomial") {
    CHECK(reciprocal(BinaryPoly::from_exponents({3, 1, 0})) == BinaryPoly::from_exponents({3, 2, 0}));
    CHECK(reciprocal(BinaryPoly::from_exponents({4, 2})) == BinaryPoly::from_exponents({2, 0}));
    CHECK_THROWS(reciprocal(BinaryPoly()));
    const auto g = BinaryPoly::from_exponents({3, 1, 0});
    CHECK(check_poly(g, 7) * g == BinaryPoly::x_pow_plus_one(7));
    CHECK_THROWS_AS(check_poly(BinaryPoly::from_exponents({2, 0}), 7), std::invalid_argument);
}

TEST_CASE("minimal polynomials are irreducible and vanish on their cosets") {
    for (unsigned m = 2; m <= 8; ++m) {
        const FieldGF2m f(m);
        for (const auto& c : all_cosets(f.order())) {
            const auto p = minimal_poly(f, c);
            CHECK(p.degree() == c.size());
            std::uint64_t mask = 0;
            for (auto e : p.exponents()) mask |= std::uint64_t{1} << e;
            CHECK(oracle::irreducible(mask));
            for (auto i : c.elements) CHECK(evaluate(f, p, f.pow_alpha(i)).is_zero());
            const std::set<std::uint32_t> roots(c.elements.begin(), c.elements.end());
            CHECK(to_oracle(p) == oracle::generator_from_roots(roots, f.modulus(), m));
        }
    }
}

TEST_CASE("m = 3 generator polynomials") {
    const FieldGF2m f(3);
    const std::uint32_t a[] = {1, 2, 4}, b[] = {3, 5, 6};
    CHECK(generator_poly(f, DefiningSet::from_members(7, a)).to_string() == "x^3 + x + 1");
    CHECK(generator_poly(f, DefiningSet::from_members(7, b)).to_string() == "x^3 + x^2 + 1");
    const std::uint32_t open[] = {1, 2};
    CHECK_THROWS_AS(generator_poly(f, DefiningSet::from_members(7, open)), std::invalid_argument);
    CHECK_THROWS_AS(generator_poly(FieldGF2m(4), DefiningSet::from_members(7, a)), std::invalid_argument);
}

TEST_CASE("[31,16] generator is frozen") {
    // naive product of (x - alpha^i) over T computed this value
    const FieldGF2m f(5);
    const auto T = defining_set(WeightClassSpec::make(2, 5, {1}));
    const auto g = generator_poly(f, T);
    CHECK(g.to_hex() == "0xDD5D");
    CHECK(T.size() == 15);
}

TEST_CASE("generator polynomials match the root-product oracle for m <= 7") {
    for (unsigned m = 3; m <= 7; m += 2) {
        const FieldGF2m f(m);
        for (unsigned r : {2u, 4u, 6u, 8u}) {
            std::vector<unsigned> S;
            for (unsigned s = 1; s < r; s += 2) S.push_back(s);
            const auto spec = WeightClassSpec::make(r, m, S);
            const auto g = generator_poly(f, defining_set(spec));
            CHECK(to_oracle(g) == oracle::generator_from_roots(oracle::weight_class_set(r, m, S), f.modulus(), m));
        }
    }
}
