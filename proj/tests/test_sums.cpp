#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulersum/sums.hpp"

#include "eulersum/euler.hpp"
#include "oracles.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

using eulersum::alternating_sign_sum;
using eulersum::apostol_dedekind_sum;
using eulersum::apostol_dedekind_sum_weighted;
using eulersum::distribution_sides;
using eulersum::euler_at_zero;
using eulersum::EvalPath;
using eulersum::evaluate_apostol_sum;
using eulersum::generalized_dedekind_sum;
using eulersum::Rational;
using eulersum::reciprocity_sides;
using eulersum::ReciprocityReport;

TEST_CASE("alternating Euler sum, golden values for (5,3) and (3,5)") {
    CHECK(apostol_dedekind_sum(1, 5, 3) == Rational(1, 2));
    CHECK(apostol_dedekind_sum(1, 3, 5) == Rational(1, 2));
    CHECK(apostol_dedekind_sum(2, 5, 3) == Rational(4, 27));
    CHECK(apostol_dedekind_sum(2, 3, 5) == Rational(-44, 125));
    CHECK(apostol_dedekind_sum(3, 5, 3) == Rational(-1, 4));
    CHECK(apostol_dedekind_sum(3, 3, 5) == Rational(-1, 4));
    CHECK(apostol_dedekind_sum(4, 5, 3) == Rational(-44, 243));
    CHECK(apostol_dedekind_sum(4, 3, 5) == Rational(1348, 3125));
    CHECK(apostol_dedekind_sum(5, 5, 3) == Rational(1, 2));
    CHECK(apostol_dedekind_sum(5, 3, 5) == Rational(1, 2));
}

TEST_CASE("alternating Euler sum, golden values for (7,11) and (11,7)") {
    CHECK(apostol_dedekind_sum(1, 7, 11) == Rational(1, 2));
    CHECK(apostol_dedekind_sum(1, 11, 7) == Rational(1, 2));
    CHECK(apostol_dedekind_sum(2, 7, 11) == Rational(-524, 1331));
    CHECK(apostol_dedekind_sum(2, 11, 7) == Rational(64, 343));
    CHECK(apostol_dedekind_sum(3, 7, 11) == Rational(-1, 4));
    CHECK(apostol_dedekind_sum(3, 11, 7) == Rational(-1, 4));
    CHECK(apostol_dedekind_sum(4, 7, 11) == Rational(78532, 161051));
    CHECK(apostol_dedekind_sum(4, 11, 7) == Rational(-4160, 16807));
    CHECK(apostol_dedekind_sum(5, 7, 11) == Rational(1, 2));
    CHECK(apostol_dedekind_sum(5, 11, 7) == Rational(1, 2));
}

TEST_CASE("b = 1 collapses to the single j = 0 term") {
    for (unsigned p = 0; p <= 8; ++p) {
        CHECK(apostol_dedekind_sum(p, 4, 1) == -euler_at_zero(p));
        CHECK(apostol_dedekind_sum(p, 9, 1) == -euler_at_zero(p));
    }
    CHECK(apostol_dedekind_sum(1, 7, 1) == Rational(1, 2));
}

TEST_CASE("sum accepts any positive arguments but rejects nonpositive") {
    CHECK_NOTHROW(apostol_dedekind_sum(3, 6, 4));
    CHECK_THROWS_AS(apostol_dedekind_sum(3, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(apostol_dedekind_sum(3, 6, -1), std::invalid_argument);
}

TEST_CASE("Bernoulli-function sum") {
    CHECK(generalized_dedekind_sum(1, 1, 3) == Rational(1, 18));
    CHECK(generalized_dedekind_sum(1, 2, 3) == Rational(-1, 18));
    for (unsigned p = 1; p <= 6; ++p) {
        CHECK(generalized_dedekind_sum(p, 5, 1).is_zero());
    }
    CHECK_THROWS_AS(generalized_dedekind_sum(0, 1, 3), std::invalid_argument);
}

TEST_CASE("alternating sign sum") {
    CHECK(alternating_sign_sum(1, 1) == 1);
    CHECK(alternating_sign_sum(5, 3) == 1);
    CHECK(alternating_sign_sum(3, 5) == 1);
    CHECK_THROWS_AS(alternating_sign_sum(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(alternating_sign_sum(3, 9), std::invalid_argument);

    for (std::int64_t a = 1; a <= 51; a += 2) {
        for (std::int64_t b = a; b <= 51; b += 2) {
            if (std::gcd(a, b) == 1) {
                CHECK(alternating_sign_sum(a, b) + alternating_sign_sum(b, a) == 2);
            }
        }
    }
}

TEST_CASE("reciprocity, worked instances") {
    SUBCASE("even branch") {
        const ReciprocityReport rep = reciprocity_sides(2, 5, 3);
        CHECK(rep.parity_case == 1);
        CHECK(rep.lhs == Rational(-112));
        CHECK(rep.rhs == Rational(-112));
        CHECK(rep.holds);
    }
    SUBCASE("odd branch") {
        const ReciprocityReport rep = reciprocity_sides(5, 7, 11);
        CHECK(rep.parity_case == 2);
        CHECK(rep.lhs == Rational(72122));
        CHECK(rep.holds);
    }
    SUBCASE("p = 1") {
        const ReciprocityReport rep = reciprocity_sides(1, 5, 3);
        CHECK(rep.lhs == Rational(-1));
        CHECK(rep.rhs == Rational(-1));
        CHECK(rep.holds);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(reciprocity_sides(0, 5, 3), std::invalid_argument);
        CHECK_THROWS_AS(reciprocity_sides(2, 4, 3), std::invalid_argument);
        CHECK_THROWS_AS(reciprocity_sides(2, 3, 9), std::invalid_argument);
    }
}

TEST_CASE("reciprocity sweep over odd coprime pairs") {
    for (unsigned p = 1; p <= 8; ++p) {
        for (std::int64_t a = 1; a <= 15; a += 2) {
            for (std::int64_t b = a + 2; b <= 15; b += 2) {
                if (std::gcd(a, b) == 1) {
                    CHECK(reciprocity_sides(p, a, b).holds);
                }
            }
        }
    }
}

TEST_CASE("weighted-identity path") {
    CHECK(apostol_dedekind_sum_weighted(1, 5, 3) == Rational(1, 2));
    CHECK(apostol_dedekind_sum_weighted(3, 7, 11) == Rational(-1, 4));
    CHECK(apostol_dedekind_sum_weighted(2, 1, 1) == Rational(0));
    CHECK_THROWS_AS(apostol_dedekind_sum_weighted(2, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(apostol_dedekind_sum_weighted(2, 3, 9), std::invalid_argument);

    for (unsigned p = 0; p <= 6; ++p) {
        for (std::int64_t a = 1; a <= 13; a += 2) {
            for (std::int64_t b = 1; b <= 13; b += 2) {
                if (std::gcd(a, b) == 1) {
                    CHECK(apostol_dedekind_sum_weighted(p, a, b) ==
                          apostol_dedekind_sum(p, a, b));
                }
            }
        }
    }

    const auto direct = evaluate_apostol_sum(2, 5, 3, EvalPath::direct);
    const auto weighted = evaluate_apostol_sum(2, 5, 3, EvalPath::weighted_identity);
    CHECK(direct.value == weighted.value);
    CHECK(to_string(direct.path) == "direct");
    CHECK(to_string(weighted.path) == "weighted-identity");
}

TEST_CASE("distribution identity") {
    SUBCASE("both sides vanish for b = 1, p = 2") {
        const auto [scaled, reference] = distribution_sides(2, 2, 1, 3);
        CHECK(scaled.is_zero());
        CHECK(reference.is_zero());
    }
    SUBCASE("worked instances") {
        const auto one = distribution_sides(1, 2, 3, 3);
        CHECK(one.first == one.second);
        const auto three = distribution_sides(3, 4, 5, 3);
        CHECK(three.first == three.second);
    }
    SUBCASE("parity violations are rejected") {
        CHECK_THROWS_AS(distribution_sides(1, 3, 3, 3), std::invalid_argument);
        CHECK_THROWS_AS(distribution_sides(1, 2, 4, 3), std::invalid_argument);
        CHECK_THROWS_AS(distribution_sides(1, 2, 3, 2), std::invalid_argument);
    }
    SUBCASE("sweep") {
        for (unsigned p = 0; p <= 6; ++p) {
            for (std::int64_t a = 2; a <= 10; a += 2) {
                for (std::int64_t b = 1; b <= 9; b += 2) {
                    for (std::int64_t q = 1; q <= 9; q += 2) {
                        const auto [scaled, reference] = distribution_sides(p, a, b, q);
                        CHECK(scaled == reference);
                    }
                }
            }
        }
    }
}

TEST_CASE("shift lemmas on randomized rational points") {
    std::mt19937_64 rng(31);
    const auto check_shift = [](unsigned p, std::int64_t a, std::int64_t b, const Rational& x) {
        const eulersum::Polynomial ep = eulersum::euler_polynomial(p);
        Rational acc;
        for (std::int64_t j = 0; j < b; ++j) {
            const Rational term =
                quasi_euler_eval(ep, (x + Rational(a) * Rational(j)) / Rational(b));
            acc += j % 2 == 0 ? term : -term;
        }
        return acc == Rational(1, b).pow(p) * quasi_euler_eval(ep, x);
    };

    for (unsigned p = 0; p <= 6; ++p) {
        for (std::int64_t b = 1; b <= 15; b += 2) {
            CHECK(check_shift(p, 1, b, testutil::random_rational(rng, 60, 24)));
            for (std::int64_t a = 1; a <= 15; a += 2) {
                if (std::gcd(a, b) == 1) {
                    CHECK(check_shift(p, a, b, testutil::random_rational(rng, 60, 24)));
                }
            }
        }
    }
}
