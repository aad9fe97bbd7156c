#include <doctest.h>

#include <limits>
#include <random>

#include "support/oracles.hpp"
#include "verlinde/laurent.hpp"

using verlinde::LaurentPoly;
using verlinde::OverflowError;

namespace {

const LaurentPoly a = LaurentPoly::monomial(1);
const LaurentPoly a_inv = LaurentPoly::monomial(-1);
const LaurentPoly one = LaurentPoly::constant(1);

}  // namespace

TEST_CASE("laurent_add examples") {
    CHECK(verlinde::laurent_add(a, a_inv) == LaurentPoly{{1, 1}, {-1, 1}});
    CHECK((a - a).is_zero());
    CHECK((a - a).terms().empty());
    CHECK(LaurentPoly{{0, 2}, {1, 1}} + LaurentPoly{{0, 3}, {1, -1}} == LaurentPoly::constant(5));
}

TEST_CASE("laurent_mul examples") {
    CHECK(verlinde::laurent_mul(a, a_inv) == one);
    const auto s = a + a_inv;
    CHECK(s * s == LaurentPoly{{2, 1}, {0, 2}, {-2, 1}});
    const LaurentPoly p{{-3, 7}, {0, -2}, {5, 1}};
    CHECK(p * one == p);
    CHECK((p * LaurentPoly{}).is_zero());
}

TEST_CASE("canonical form drops zeros everywhere") {
    CHECK(LaurentPoly{{3, 0}}.is_zero());
    CHECK(LaurentPoly{{3, 2}, {3, -2}}.is_zero());
    CHECK(LaurentPoly::from_terms({{1, 0}, {2, 5}}) == LaurentPoly::monomial(2, 5));
    // Sparse product with a wide exponent gap takes the map path.
    const LaurentPoly wide{{-100000, 1}, {100000, 1}};
    CHECK(wide * wide == LaurentPoly{{-200000, 1}, {0, 2}, {200000, 1}});
}

TEST_CASE("weyl_involution examples") {
    using verlinde::weyl_involution;
    CHECK(weyl_involution(a) == a_inv);
    CHECK(weyl_involution(a + a_inv) == a + a_inv);
    CHECK(weyl_involution(LaurentPoly{{2, 3}, {-1, -1}}) == LaurentPoly{{-2, 3}, {1, -1}});
    CHECK(verlinde::is_weyl_symmetric(a + a_inv));
    CHECK_FALSE(verlinde::is_weyl_symmetric(a));
}

TEST_CASE("overflow is an error, not wraparound") {
    constexpr auto big = std::numeric_limits<std::int64_t>::max();
    const auto p = LaurentPoly::constant(big);
    CHECK_THROWS_AS(p + one, OverflowError);
    CHECK_THROWS_AS(p * LaurentPoly::constant(2), OverflowError);
    CHECK_THROWS_AS(-LaurentPoly::constant(std::numeric_limits<std::int64_t>::min()), OverflowError);
    CHECK_NOTHROW(p + LaurentPoly::constant(-1));
}

TEST_CASE("text and json rendering") {
    CHECK(verlinde::to_text(LaurentPoly{}) == "0");
    CHECK(verlinde::to_text(LaurentPoly{{2, 3}, {-1, -1}, {0, 1}}) == "-1*a^-1 + 1*a^0 + 3*a^2");
    CHECK(verlinde::to_text(LaurentPoly{{1, 2}, {4, -5}}) == "2*a^1 - 5*a^4");
    CHECK(verlinde::to_json(LaurentPoly{{2, 3}, {-1, -1}}).dump() == "[[-1,-1],[2,3]]");
    CHECK(verlinde::to_json(LaurentPoly{}).dump() == "[]");
}

TEST_CASE("ring axioms and Weyl homomorphism on random inputs") {
    std::mt19937_64 rng(0x5eed'1a01);
    using verlinde::oracle::random_laurent;
    using verlinde::weyl_involution;
    for (int i = 0; i < 1000; ++i) {
        const auto p = random_laurent(rng);
        const auto q = random_laurent(rng);
        const auto r = random_laurent(rng);
        REQUIRE(p + q == q + p);
        REQUIRE(p * q == q * p);
        REQUIRE((p + q) + r == p + (q + r));
        REQUIRE((p * q) * r == p * (q * r));
        REQUIRE(p * (q + r) == p * q + p * r);
        REQUIRE(weyl_involution(p * q) == weyl_involution(p) * weyl_involution(q));
        REQUIRE(weyl_involution(p + q) == weyl_involution(p) + weyl_involution(q));
        REQUIRE(weyl_involution(weyl_involution(p)) == p);
        const auto pq = p * q;
        for (const auto& [e, c] : pq.terms()) REQUIRE(c != 0);
    }
}
