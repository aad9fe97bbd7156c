#include <doctest.h>

#include <cmath>

#include "verlinde/fusion.hpp"

using namespace verlinde;

TEST_CASE("fusion_coeff examples") {
    CHECK(fusion_coeff(1, 1, 1, 0) == 1);
    CHECK(fusion_coeff(1, 1, 1, 1) == 0);
    CHECK(fusion_coeff(2, 1, 1, 2) == 1);
    for (Level k = 0; k <= 6; ++k)
        for (Label b = 0; b <= k; ++b)
            for (Label c = 0; c <= k; ++c) REQUIRE(fusion_coeff(k, 0, b, c) == (b == c ? 1 : 0));
}

TEST_CASE("fusion_coeff rejects labels out of range") {
    CHECK_THROWS_AS(fusion_coeff(2, 3, 0, 0), LabelOutOfRange);
    CHECK_THROWS_AS(fusion_coeff(2, 0, -1, 0), LabelOutOfRange);
    CHECK_THROWS_AS(fusion_coeff(2, 0, 0, 5), LabelOutOfRange);
    CHECK_THROWS_AS(fusion_coeff(-1, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("Verlinde sum examples") {
    CHECK(verlinde_coeff_numeric(SMatrix(1), 1, 1, 0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(verlinde_coeff_numeric(SMatrix(1), 1, 1, 1)) < 1e-9);
    CHECK(verlinde_coeff_numeric(SMatrix(2), 1, 1, 2) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(verlinde_coeff_numeric(SMatrix(2), 3, 0, 0), LabelOutOfRange);
}

TEST_CASE("an implausibly tight tolerance is reported as an oracle disagreement") {
    const SMatrix tight(17, 1e-300);
    bool threw = false;
    for (Label a = 0; a <= 17 && !threw; ++a)
        for (Label b = 0; b <= 17 && !threw; ++b) {
            try {
                verlinde_coeff_numeric(tight, a, b, (a + b) % 18);
            } catch (const OracleDisagreement&) {
                threw = true;
            }
        }
    CHECK(threw);
    CHECK_THROWS_AS(SMatrix(3, 0.0), std::invalid_argument);
}

TEST_CASE("S-matrix shape") {
    const SMatrix s0(0);
    CHECK(s0.size() == 1);
    CHECK(s0(0, 0) == doctest::Approx(1.0));
    const SMatrix s1(1);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) CHECK(std::abs(s1(a, b)) == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(s1(1, 1) < 0);
    for (Level k = 0; k <= 20; ++k) {
        const SMatrix s(k);
        REQUIRE(s.is_symmetric());
        REQUIRE(s.orthogonality_residual() <= 1e-9);
        for (std::size_t l = 0; l < s.size(); ++l) REQUIRE(s(0, l) > 0);
    }
    CHECK_THROWS_AS(SMatrix(-2), std::invalid_argument);
}

TEST_CASE("build_fusion_ring examples") {
    const auto r0 = build_fusion_ring(0);
    CHECK(r0.rank() == 1);
    CHECK(r0.N(0, 0, 0) == 1);

    const auto r1 = build_fusion_ring(1);
    CHECK(r1.N(1, 1, 0) == 1);
    CHECK(r1.N(1, 1, 1) == 0);

    const auto r2 = build_fusion_ring(2);
    CHECK(r2.N(1, 1, 0) == 1);
    CHECK(r2.N(1, 1, 1) == 0);
    CHECK(r2.N(1, 1, 2) == 1);
    CHECK(r2.N(1, 2, 1) == 1);
    CHECK(r2.N(1, 2, 0) == 0);
    CHECK(r2.N(2, 2, 0) == 1);
    CHECK(r2.N(2, 2, 2) == 0);
    CHECK(to_text(r2) == "V_0·V_0 = V_0\nV_0·V_1 = V_1\nV_0·V_2 = V_2\nV_1·V_1 = V_0 + V_2\n"
                         "V_1·V_2 = V_1\nV_2·V_2 = V_0\n");
    CHECK_THROWS_AS(build_fusion_ring(-1), std::invalid_argument);
}

TEST_CASE("fusion rings are associative and S3-symmetric, and match the Verlinde formula, k <= 20") {
    for (Level k = 0; k <= 20; ++k) {
        const auto ring = build_fusion_ring(k);
        const SMatrix s(k);
        const auto n = ring.rank();
        REQUIRE(ring.N.is_associative());
        REQUIRE(ring.N.is_unit(0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    const auto v = ring.N(a, b, c);
                    REQUIRE(v == ring.N(b, a, c));
                    REQUIRE(v == ring.N(a, c, b));
                    REQUIRE(v == ring.N(c, b, a));
                    const double x = verlinde_coeff_numeric(s, static_cast<Label>(a), static_cast<Label>(b),
                                                            static_cast<Label>(c));
                    REQUIRE(std::abs(x - std::round(x)) <= 1e-9);
                    REQUIRE(static_cast<Coeff>(std::llround(x)) == v);
                }
    }
}
