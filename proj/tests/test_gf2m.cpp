#include <doctest.h>

#include <numeric>

#include "duadic/gf2m.hpp"
#include "oracles.hpp"

using namespace duadic;

TEST_CASE("smallest primitive polynomials are frozen") {
    // brute-force order search over all degree-m masks produced these values
    const std::pair<unsigned, std::uint32_t> expected[] = {{2, 0x7},  {3, 0xB},  {4, 0x13}, {5, 0x25},
                                                           {6, 0x43}, {7, 0x83}, {8, 0x11D}};
    for (auto [m, poly] : expected) {
        CAPTURE(m);
        CHECK(smallest_primitive_poly(m) == poly);
        CHECK(FieldGF2m(m).modulus() == poly);
    }
    CHECK(FieldGF2m(5).modulus_hex() == "0x25");
}

TEST_CASE("primitive polynomial choice agrees with a brute-force order oracle") {
    for (unsigned m = 2; m <= 12; ++m) {
        CAPTURE(m);
        const std::uint32_t n = (1u << m) - 1;
        std::uint32_t first = 0;
        for (std::uint32_t p = (1u << m) | 1u; p < (2u << m); p += 2)
            if (oracle::order_of_x(p, m) == n) {
                first = p;
                break;
            }
        CHECK(smallest_primitive_poly(m) == first);
        for (std::uint32_t p = (1u << m) | 1u; p < (2u << m) && p < (1u << m) + 300; p += 2)
            CHECK(is_primitive_poly(p, m) == (oracle::order_of_x(p, m) == n));
    }
}

TEST_CASE("field multiplication matches shift-and-add exhaustively for small m") {
    for (unsigned m = 2; m <= 8; ++m) {
        CAPTURE(m);
        const FieldGF2m f(m);
        for (std::uint32_t a = 0; a < (1u << m); ++a)
            for (std::uint32_t b = 0; b < (1u << m); ++b)
                REQUIRE(f.mul({a}, {b}).bits == oracle::gf_mul(a, b, f.modulus(), m));
    }
}

TEST_CASE("log, antilog, inverse and pow are consistent") {
    for (unsigned m : {3u, 9u, 13u, 17u, 20u}) {
        CAPTURE(m);
        const FieldGF2m f(m);
        const std::uint32_t n = f.order();
        const std::uint32_t step = std::max<std::uint32_t>(1, n / 4000);
        for (std::uint32_t e = 0; e < n; e += step) {
            const FieldElem x = f.pow_alpha(e);
            CHECK(f.log(x) == e);
            CHECK(f.mul(x, f.inverse(x)) == f.one());
            CHECK(f.pow(f.alpha(), e) == x);
        }
        CHECK(f.pow_alpha(n) == f.one());
        CHECK_THROWS_AS(f.log(f.zero()), std::domain_error);
        CHECK_THROWS_AS(f.inverse(f.zero()), std::domain_error);
        CHECK_THROWS(f.element(1u << m));
    }
}

TEST_CASE("field degree range is enforced") {
    CHECK_THROWS_AS(FieldGF2m(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldGF2m(21), std::invalid_argument);
}

TEST_CASE("prime factors") {
    CHECK(prime_factors(1) == std::vector<std::uint64_t>{});
    CHECK(prime_factors(31) == std::vector<std::uint64_t>{31});
    CHECK(prime_factors(511) == std::vector<std::uint64_t>{7, 73});
    CHECK(prime_factors((1u << 20) - 1) == std::vector<std::uint64_t>{3, 5, 11, 31, 41});
}

TEST_CASE("mersenne gcd identity agrees with integer gcd and makes the default v units") {
    for (unsigned m = 1; m <= 19; ++m)
        for (unsigned l = 1; l <= 19; ++l)
            CHECK(mersenne_gcd(m, l) == std::gcd((std::uint64_t{1} << m) - 1, (std::uint64_t{1} << l) - 1));
    for (unsigned m = 3; m <= 19; m += 2) {
        const unsigned h = (m - 1) / 2;
        const std::uint64_t n = (std::uint64_t{1} << m) - 1;
        CHECK(mersenne_gcd(m, h) == 1);
        CHECK(mersenne_gcd(m, h + 1) == 1);
        CHECK(std::gcd((std::uint64_t{1} << h) - 1, n) == 1);
        CHECK(std::gcd((std::uint64_t{1} << (h + 1)) - 1, n) == 1);
    }
}
