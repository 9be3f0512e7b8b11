#include <doctest.h>

#include <cmath>

#include "subseq/errors.hpp"
#include "subseq/expectation.hpp"
#include "subseq/oracle.hpp"

using namespace subseq;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

} // namespace

TEST_CASE("closed form examples")
{
    CHECK(closed_form_binary(0.5, 3) == doctest::Approx(4.75).epsilon(1e-14));
    CHECK(closed_form_binary(1.0, 7) == 7.0);
    CHECK(closed_form_binary(0.0, 7) == 7.0);
    CHECK(closed_form_binary(0.5, 0) == 0.0);

    const auto exact = oracle::exhaustive_expectation(IidModel<Rational>::binary(q("3/10")), 10);
    CHECK(rel(closed_form_binary(0.3, 10), exact.at_length(10).to_double()) <= 1e-9);

    CHECK_THROWS_AS(closed_form_binary(1.5, 3), InvalidInput);
    CHECK_THROWS_AS(closed_form_binary(-0.1, 3), InvalidInput);
}

TEST_CASE("closed form at 1/2 is the nonempty count: 2(3/2)^n - 2")
{
    for (std::size_t n = 1; n <= 30; ++n) {
        CHECK(rel(closed_form_binary(0.5, n), 2.0 * std::pow(1.5, double(n)) - 2.0) <= 1e-12);
    }
}

TEST_CASE("asymptotic constants")
{
    const auto half = asymptotic_constants(0.5);
    CHECK(half.base == doctest::Approx(1.5));
    CHECK(half.prefactor == doctest::Approx(2.0));

    const auto quarter = asymptotic_constants(0.25);
    CHECK(quarter.base == doctest::Approx(1.0 + std::sqrt(3.0) / 4.0));
    CHECK(quarter.base == doctest::Approx(closed_form_binary(0.25, 201) / closed_form_binary(0.25, 200)));
    CHECK(quarter.prefactor ==
          doctest::Approx(closed_form_binary(0.25, 200) / std::pow(quarter.base, 200.0)).epsilon(1e-9));

    for (double p : {0.1, 0.2, 0.3, 0.45}) {
        CHECK(asymptotic_constants(p).base == doctest::Approx(asymptotic_constants(1 - p).base));
        CHECK(asymptotic_constants(p).prefactor == doctest::Approx(asymptotic_constants(1 - p).prefactor));
    }
    CHECK_THROWS_AS(asymptotic_constants(0.0), InvalidInput);
    CHECK_THROWS_AS(asymptotic_constants(1.0), InvalidInput);
}

TEST_CASE("a/b recurrence")
{
    const Rational p = q("2/7");
    const auto w = ab_recurrence(p, 12);
    CHECK(w.a[0] == p);
    CHECK(w.b[0] == Rational(1) - p);
    CHECK(w.a[1] == Rational(2) * p - p * p);

    const auto half = ab_recurrence(q("1/2"), 20);
    CHECK(half.a == half.b);

    for (double pf : {0.1, 0.3, 0.5, 0.8}) {
        const auto wd = ab_recurrence(pf, 40);
        double running = 0;
        for (std::size_t i = 1; i <= 40; ++i) {
            running += wd.a[i - 1] + wd.b[i - 1];
            REQUIRE(rel(running, closed_form_binary(pf, i)) <= 1e-9);
            const auto [ea, eb] = ab_explicit(pf, i);
            REQUIRE(rel(ea, wd.a[i - 1]) <= 1e-12);
            REQUIRE(rel(eb, wd.b[i - 1]) <= 1e-12);
        }
    }

    // row totals are E[nu(S_i)] from the oracle
    const auto exact = oracle::exhaustive_expectation(IidModel<Rational>::binary(p), 12);
    Rational running(0);
    for (std::size_t i = 1; i <= 12; ++i) {
        running += w.a[i - 1] + w.b[i - 1];
        REQUIRE(running == exact.at_length(i));
    }

    CHECK_THROWS_AS(ab_recurrence(1.0, 3), InvalidInput);
    CHECK_THROWS_AS(ab_recurrence(0.5, 0), InvalidInput);
}

TEST_CASE("IID matrix engine examples")
{
    const auto fair = iid_matrix_expectation(IidModel<Rational>::uniform(2), 2);
    CHECK(fair.at_length(1) == Rational(1));
    CHECK(fair.at_length(2) == q("5/2"));

    for (std::size_t d : {3u, 4u}) {
        const auto model = IidModel<Rational>::uniform(d);
        const std::size_t n = d == 3 ? 8 : 6;
        CHECK(iid_matrix_expectation(model, n).values == oracle::exhaustive_expectation(model, n).values);
    }
    const IidModel<Rational> skewed({q("1/2"), q("1/5"), q("1/10"), q("1/5")});
    CHECK(iid_matrix_expectation(skewed, 6).values == oracle::exhaustive_expectation(skewed, 6).values);
}

TEST_CASE("IID matrix engine agrees with the closed form for d = 2")
{
    for (int tenth = 1; tenth <= 9; ++tenth) {
        const double p = tenth / 10.0;
        const auto series = iid_matrix_expectation(IidModel<double>::binary(p), 40);
        for (std::size_t n = 1; n <= 40; ++n) {
            REQUIRE(rel(series.at_length(n), closed_form_binary(p, n)) <= 1e-9);
        }
    }
}

TEST_CASE("IID model validation")
{
    CHECK_THROWS_AS(IidModel<Rational>({q("1/2"), q("1/3")}), InvalidInput);
    CHECK_THROWS_AS(IidModel<double>({0.5, 0.6}), InvalidInput);
    CHECK_THROWS_AS(IidModel<double>({1.2, -0.2}), InvalidInput);
    CHECK_THROWS_AS(IidModel<double>(std::vector<double>{}), InvalidInput);
    CHECK_NOTHROW(IidModel<double>({0.1, 0.2, 0.7}));
}

TEST_CASE("Markov engine examples")
{
    SUBCASE("equal rows reduce to the IID closed form")
    {
        for (double p : {0.2, 0.5, 0.75}) {
            const auto series = markov_expectation(MarkovModel<double>(p, p), 40);
            for (std::size_t n = 1; n <= 40; ++n) {
                REQUIRE(rel(series.at_length(n), closed_form_binary(p, n)) <= 1e-9);
            }
        }
    }
    SUBCASE("exact agreement with the exhaustive oracle")
    {
        const MarkovModel<Rational> chain(q("7/10"), q("3/10"));
        CHECK(markov_expectation(chain, 12).values == oracle::exhaustive_expectation(chain, 12).values);
        CHECK(markov_expectation(chain, 3).at_length(3) == q("411/100"));
    }
    SUBCASE("first row carries total weight 1")
    {
        const MarkovModel<Rational> chain(q("1/3"), q("4/5"));
        CHECK(markov_initial_weights(chain).sum() == Rational(1));
        CHECK(markov_expectation(chain, 1).at_length(1) == Rational(1));
    }
    SUBCASE("boundary parameters are rejected")
    {
        CHECK_THROWS_AS(markov_expectation(MarkovModel<double>(1.0, 0.5), 3), InvalidInput);
        CHECK_THROWS_AS(markov_expectation(MarkovModel<double>(0.5, 0.0), 3), InvalidInput);
        CHECK_THROWS_AS(MarkovModel<double>(1.0, 0.0), InvalidInput);
        CHECK_THROWS_AS(MarkovModel<double>(1.1, 0.5), InvalidInput);
    }
    CHECK(MarkovModel<Rational>(q("7/10"), q("3/10")).stationary_one() == q("1/2"));
}

TEST_CASE("expectation series properties")
{
    std::vector<double> grid;
    for (int tenth = 1; tenth <= 9; ++tenth) {
        grid.push_back(tenth / 10.0);
    }
    for (double p : grid) {
        // symmetric in p <-> 1-p up to rounding of 1-p
        for (std::size_t n = 1; n <= 40; ++n) {
            REQUIRE(closed_form_binary(p, n) == doctest::Approx(closed_form_binary(1 - p, n)).epsilon(1e-12));
        }
        // strictly increasing, >= 1
        const auto series = iid_matrix_expectation(IidModel<double>::binary(p), 60);
        REQUIRE(series.at_length(1) >= 1.0);
        for (std::size_t n = 2; n <= 60; ++n) {
            REQUIRE(series.at_length(n) > series.at_length(n - 1));
        }
        // ratio converges to 1 + sqrt(p(1-p))
        const double ratio = closed_form_binary(p, 201) / closed_form_binary(p, 200);
        REQUIRE(std::abs(ratio - (1 + std::sqrt(p * (1 - p)))) <= 1e-6);
        // p = 1/2 maximises
        for (std::size_t n = 2; n <= 40; ++n) {
            REQUIRE(closed_form_binary(0.5, n) >= closed_form_binary(p, n));
        }
    }
    const auto markov = markov_expectation(MarkovModel<double>(0.9, 0.05), 50);
    for (std::size_t n = 2; n <= 50; ++n) {
        REQUIRE(markov.at_length(n) > markov.at_length(n - 1));
    }
}
