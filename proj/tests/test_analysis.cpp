#include <doctest.h>

#include <cmath>

#include "subseq/analysis.hpp"
#include "subseq/errors.hpp"
#include "support.hpp"

using namespace subseq;
using namespace subseq::analysis;

namespace {

const IidModel<Rational> fair = IidModel<Rational>::uniform(2);

LetterString ones(std::size_t k) { return LetterString(binary_alphabet, std::vector<Letter>(k, 1)); }

} // namespace

TEST_CASE("expected occurrences")
{
    CHECK(expected_occurrences(4, testing::bin("11"), fair) == 1.5);
    for (std::size_t n : {1u, 7u, 100u}) {
        CHECK(expected_occurrences(n, testing::bin("1"), fair) == doctest::Approx(n / 2.0));
    }
    CHECK(expected_occurrences_exact(20, ones(10), fair) == Rational(mpz_class(184756), mpz_class(1024)));
    CHECK(expected_occurrences(20, ones(10), fair) == doctest::Approx(180.42578125));
    CHECK(expected_occurrences(5, testing::bin(""), fair) == 1.0);
    CHECK_THROWS_AS(expected_occurrences(3, testing::bin("0101"), fair), InvalidInput);
    CHECK_THROWS_AS(expected_occurrences(5, parse_letter_string("2", 3), fair), InvalidInput);
}

TEST_CASE("expected occurrences are symmetric under relabeling for uniform models")
{
    const auto tri = IidModel<Rational>::uniform(3);
    CHECK(expected_occurrences_exact(12, parse_letter_string("0120", 3), tri) ==
          expected_occurrences_exact(12, parse_letter_string("2102", 3), tri));
    CHECK(expected_occurrences_exact(30, testing::bin("0011010"), fair) ==
          expected_occurrences_exact(30, testing::bin("1100101"), fair));
}

TEST_CASE("balance function")
{
    CHECK(balance_function(0.0) == 1.0);
    CHECK(balance_function(1.0) == 2.0);
    CHECK(balance_function(0.5) == doctest::Approx(std::sqrt(2.0) / 2.0));
    CHECK(balance_function(1.0 / 3.0) == doctest::Approx(2.0 / 3.0));
    CHECK(binary_entropy(0.5) == 1.0);
}

TEST_CASE("solve_balance")
{
    SUBCASE("target 0.75")
    {
        const auto r = solve_balance(0.75);
        REQUIRE(r.lower);
        CHECK(std::floor(r.lower->x * 1000) / 1000 == doctest::Approx(0.123));
        CHECK(std::floor(r.upper.x * 1000) / 1000 == doctest::Approx(0.570));
        CHECK(std::abs(r.lower->residual) <= 1e-12);
        CHECK(std::abs(r.upper.residual) <= 1e-12);
        CHECK(r.lower->x < 0.5);
        CHECK(r.upper.x > 0.5);
        CHECK(r.lower->lo < r.lower->x);
        CHECK(r.lower->x < r.lower->hi);
        CHECK(std::abs(balance_function(r.lower->x) - 0.75) <= 1e-12);
        CHECK(std::abs(balance_function(r.upper.x) - 0.75) <= 1e-12);
    }
    SUBCASE("the minimiser is 1/3 and its value gives a double root")
    {
        const auto r = solve_balance(2.0 / 3.0);
        CHECK(r.minimizer == doctest::Approx(1.0 / 3.0).epsilon(1e-7));
        REQUIRE(r.lower);
        CHECK(std::abs(r.lower->x - r.upper.x) <= 1e-6);
        CHECK(std::abs(r.upper.x - 1.0 / 3.0) <= 1e-6);
    }
    SUBCASE("target g(0.5) has 0.5 as its upper root")
    {
        const auto r = solve_balance(std::sqrt(2.0) / 2.0);
        CHECK(r.upper.x == doctest::Approx(0.5).epsilon(1e-12));
        REQUIRE(r.lower);
        CHECK(r.lower->x < 1.0 / 3.0);
    }
    SUBCASE("target 0.9")
    {
        const auto r = solve_balance(0.9);
        REQUIRE(r.lower);
        CHECK(r.lower->x < r.upper.x);
        CHECK(std::abs(balance_function(r.lower->x) - 0.9) <= 1e-12);
        CHECK(std::abs(balance_function(r.upper.x) - 0.9) <= 1e-12);
    }
    SUBCASE("target 1 keeps only the upper branch")
    {
        const auto r = solve_balance(1.0);
        CHECK_FALSE(r.lower);
        CHECK(r.upper.x == doctest::Approx(occurrence_threshold().x).epsilon(1e-12));
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(solve_balance(0.6), NoRootError);
        CHECK_THROWS_AS(solve_balance(0.0), InvalidInput);
        CHECK_THROWS_AS(solve_balance(1.2), InvalidInput);
    }
}

TEST_CASE("occurrence threshold")
{
    const auto r = occurrence_threshold();
    CHECK(std::abs(r.x - 0.7729) <= 1e-4);
    CHECK(std::floor(r.x * 10000) / 10000 == doctest::Approx(0.7729));
    CHECK(std::abs(binary_entropy(r.x) - r.x) <= 1e-12);
    CHECK(std::abs(r.residual) <= 1e-12);

    // patterns at least this long are expected to occur less than once
    const std::size_t n = 1000;
    const auto k = static_cast<std::size_t>(std::ceil(r.x * n));
    std::vector<Letter> balanced;
    for (std::size_t i = 0; i < k; ++i) {
        balanced.push_back(static_cast<Letter>(i % 2));
    }
    CHECK(log2_expected_occurrences(n, LetterString(binary_alphabet, balanced), fair) < 0.0);
    CHECK(log2_expected_occurrences(n, ones(k), fair) < 0.0);
    CHECK(expected_occurrences(n, ones(k), fair) < 1.0);
}

TEST_CASE("Stirling consistency of the occurrence exponent")
{
    const std::size_t n = 10000;
    for (double x : {0.25, 0.5, 0.75}) {
        const auto k = static_cast<std::size_t>(x * n);
        const double rate = log2_expected_occurrences(n, ones(k), fair) / double(n);
        CHECK(std::abs(rate - (binary_entropy(x) - x)) <= 1e-2);
    }
}
