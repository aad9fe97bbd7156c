#include <doctest.h>

#include "support/oracles.hpp"
#include "verlinde/twisted_k.hpp"

using namespace verlinde;

namespace {

RepRingElem X(std::int64_t n, std::int64_t c = 1) { return RepRingElem::irrep(n, c); }

void check_matrix(const MVMap& mv, const RepRingElem& m00, const RepRingElem& m01, const RepRingElem& m10,
                  const RepRingElem& m11) {
    CHECK(mv.at(0, 0) == m00);
    CHECK(mv.at(0, 1) == m01);
    CHECK(mv.at(1, 0) == m10);
    CHECK(mv.at(1, 1) == m11);
}

}  // namespace

TEST_CASE("TwistClass") {
    CHECK(TwistClass(4).level() == 2);
    CHECK(TwistClass::from_level(0).m() == 2);
    CHECK(TwistClass(1).level() == -1);
    CHECK_THROWS_AS(TwistClass(0), std::invalid_argument);
    CHECK_THROWS_AS(TwistClass(-3), std::invalid_argument);
}

TEST_CASE("mv_map examples") {
    check_matrix(mv_map(TwistClass(2)), X(0), X(2), {}, X(1));
    check_matrix(mv_map(TwistClass(1)), X(0), X(1), {}, X(0));
    check_matrix(mv_map(TwistClass(5)), X(0), X(5), {}, X(4));
}

TEST_CASE("mv_map matches the closed form for m = 1..64") {
    for (std::int64_t m = 1; m <= 64; ++m) {
        const auto mv = mv_map(TwistClass(m));
        REQUIRE(mv.m == m);
        REQUIRE(mv.at(0, 0) == X(0));
        REQUIRE(mv.at(0, 1) == X(m));
        REQUIRE(mv.at(1, 0).is_zero());
        REQUIRE(mv.at(1, 1) == X(m - 1));
    }
}

TEST_CASE("certify_injective") {
    CHECK(certify_injective(mv_map(TwistClass(2))) == X(1));
    CHECK(certify_injective(mv_map(TwistClass(3))) == X(2));
    CHECK(certify_injective(mv_map(TwistClass(1))) == X(0));
    for (std::int64_t m = 2; m <= 64; ++m) REQUIRE(certify_injective(mv_map(TwistClass(m))) == X(m - 1));

    MVMap broken;
    broken.m = 7;
    broken.entries[0] = {X(1), X(2)};
    broken.entries[1] = {X(1), X(2)};
    CHECK_THROWS_AS(certify_injective(broken), TheoremViolation);
}

TEST_CASE("cokernel examples") {
    const auto q2 = cokernel(mv_map(TwistClass(2)));
    CHECK(q2.rank() == 1);
    CHECK(q2.relation == X(1));
    CHECK(q2.basis == std::vector<Weight>{0});
    CHECK(q2.structure_constants(0, 0, 0) == 1);

    const auto q4 = cokernel(mv_map(TwistClass(4)));
    CHECK(q4.rank() == 3);
    CHECK(q4.relation == X(3));
    CHECK(quotient_mul(q4, 1, 1) == std::vector<Coeff>{1, 0, 1});

    const auto q1 = cokernel(mv_map(TwistClass(1)));
    CHECK(q1.rank() == 0);
    CHECK(q1.basis.empty());
    CHECK(q1.relation == X(0));
    CHECK(q1.structure_constants.rank() == 0);
}

TEST_CASE("cokernel reports a matrix without a unit pivot") {
    MVMap broken;
    broken.m = 3;
    broken.entries[0] = {X(1), X(3)};
    broken.entries[1] = {RepRingElem{}, X(2)};
    CHECK_THROWS_AS(cokernel(broken), TheoremViolation);
}

TEST_CASE("quotient_mul examples") {
    const auto q3 = twisted_k_theory(TwistClass(3));
    CHECK(quotient_mul(q3, 1, 1) == std::vector<Coeff>{1, 0});
    const auto q4 = twisted_k_theory(TwistClass(4));
    CHECK(quotient_mul(q4, 2, 2) == std::vector<Coeff>{1, 0, 0});
    for (std::int64_t m = 2; m <= 12; ++m) {
        const auto q = twisted_k_theory(TwistClass(m));
        for (std::size_t b = 0; b < q.rank(); ++b) {
            std::vector<Coeff> e(q.rank(), 0);
            e[b] = 1;
            REQUIRE(quotient_mul(q, 0, b) == e);
        }
    }
    CHECK_THROWS_AS(quotient_mul(q4, 3, 0), std::out_of_range);
    CHECK_THROWS_AS(quotient_mul(q4, 0, 7), std::out_of_range);
}

TEST_CASE("reduction rules") {
    // X3 == 0 at m = 4, so X4 == -X2, X5 == -X1, X6 == -X0, X7 == 0, X8 == X0.
    CHECK(reduce_mod_relation(X(3), 4).is_zero());
    CHECK(reduce_mod_relation(X(4), 4) == X(2, -1));
    CHECK(reduce_mod_relation(X(6), 4) == X(0, -1));
    CHECK(reduce_mod_relation(X(7), 4).is_zero());
    CHECK(reduce_mod_relation(X(8), 4) == X(0));
    CHECK(reduce_mod_relation(X(0, 3) + X(5), 1).is_zero());
}

TEST_CASE("rewriting reduction agrees with sigma-basis division for m <= 16") {
    for (std::int64_t m = 1; m <= 16; ++m) {
        const auto q = twisted_k_theory(TwistClass(m));
        for (std::size_t a = 0; a < q.rank(); ++a)
            for (std::size_t b = 0; b < q.rank(); ++b) {
                const auto expected = oracle::quotient_product_by_division(static_cast<std::int64_t>(a),
                                                                           static_cast<std::int64_t>(b), m);
                REQUIRE_MESSAGE(quotient_mul(q, a, b) == expected, "m=" << m << " a=" << a << " b=" << b);
            }
    }
}

TEST_CASE("quotient rings are commutative, associative and unital for m <= 32") {
    for (std::int64_t m = 1; m <= 32; ++m) {
        const auto q = twisted_k_theory(TwistClass(m));
        REQUIRE(q.rank() == static_cast<std::size_t>(m - 1));
        REQUIRE(q.structure_constants.is_commutative());
        REQUIRE(q.structure_constants.is_associative());
        if (m >= 2) REQUIRE(q.structure_constants.is_unit(0));
    }
}

TEST_CASE("json schema") {
    const auto j = to_json(twisted_k_theory(TwistClass(4)));
    CHECK(j["m"] == 4);
    CHECK(j["level"] == 2);
    CHECK(j["rank"] == 3);
    CHECK(j["relation"].dump() == "[[3,1]]");
    CHECK(j["k1_rank"] == 0);
    CHECK(j["degree"] == 3);
    CHECK(j["structure_constants"][1][1].dump() == "[1,0,1]");
    const auto zero = to_json(twisted_k_theory(TwistClass(1)));
    CHECK(zero["rank"] == 0);
    CHECK(zero["structure_constants"].dump() == "[]");
}
