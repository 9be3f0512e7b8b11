#include "subseq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "subseq/counting.hpp"
#include "subseq/errors.hpp"
#include "subseq/expectation.hpp"
#include "subseq/montecarlo.hpp"
#include "subseq/oracle.hpp"

namespace subseq::verify {

namespace {

constexpr std::size_t wide_alphabet_cap = 8;
constexpr std::size_t expectation_cap = 12;

/// Calls fn on every string over [d] of every length 0..max_len.
bool for_all_strings(std::size_t d, std::size_t max_len, const std::function<bool(const LetterString&)>& fn,
                     std::size_t& visited)
{
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::size_t count = 0;
        oracle::power_within(d, len, oracle::max_exhaustive_strings, &count);
        for (std::size_t code = 0; code < count; ++code) {
            std::vector<Letter> letters(len);
            std::size_t rest = code;
            for (std::size_t i = 0; i < len; ++i) {
                letters[i] = static_cast<Letter>(rest % d);
                rest /= d;
            }
            ++visited;
            if (!fn(LetterString(Alphabet(d), std::move(letters)))) {
                return false;
            }
        }
    }
    return true;
}

CheckResult counting_vs_enumeration(std::size_t d, std::size_t max_len)
{
    std::size_t visited = 0;
    std::string failure;
    const bool ok = for_all_strings(d, max_len, [&](const LetterString& t) {
        if (count_distinct(t) != oracle::enumerate_distinct(t).size()) {
            failure = "mismatch at '" + t.to_string() + "'";
            return false;
        }
        return true;
    }, visited);
    return {"count_distinct == |enumerated set|, d=" + std::to_string(d) + ", n<=" + std::to_string(max_len),
            ok, ok ? std::to_string(visited) + " strings" : failure};
}

CheckResult tree_figures()
{
    auto row = [](std::size_t d, std::size_t n) {
        std::vector<unsigned long> out;
        for (const auto& v : oracle::tree_row(d, n).values) {
            out.push_back(v.get_ui());
        }
        return out;
    };
    using V = std::vector<unsigned long>;
    const bool ok = row(2, 0) == V{0} && row(2, 1) == V{1, 1} && row(2, 2) == V{1, 2, 2, 1} &&
                    row(2, 3) == V{1, 3, 3, 2, 2, 3, 3, 1} &&
                    row(3, 2) == V{1, 2, 2, 2, 1, 2, 2, 2, 1};
    return {"tree rows match the published figures", ok, ok ? "binary rows 0-3, ternary row 2" : "row mismatch"};
}

CheckResult pair_structure(std::size_t max_n)
{
    for (std::size_t n = 2; n <= max_n; ++n) {
        if (!oracle::check_pair_structure(n)) {
            return {"binary tree pair structure, 2<=n<=" + std::to_string(max_n), false,
                    "fails at row " + std::to_string(n)};
        }
    }
    return {"binary tree pair structure, 2<=n<=" + std::to_string(max_n), true, ""};
}

CheckResult submultiplicativity(const std::string& label, const IidModel<Rational>& model, std::size_t max_total)
{
    const std::string name = "psi(n+m) <= psi(n)psi(m) (empty-inclusive), " + label +
                             ", n+m<=" + std::to_string(max_total);
    if (max_total < 2) {
        return {name, true, "nothing to check"};
    }
    const auto series = oracle::exhaustive_expectation(model, max_total);
    std::size_t pairs = 0;
    for (std::size_t n = 1; n < max_total; ++n) {
        for (std::size_t m = 1; n + m <= max_total; ++m) {
            const Rational lhs = series.at_length(n + m) + Rational(1);
            const Rational rhs = (series.at_length(n) + Rational(1)) * (series.at_length(m) + Rational(1));
            ++pairs;
            if (lhs > rhs) {
                return {name, false, "fails at n=" + std::to_string(n) + ", m=" + std::to_string(m)};
            }
        }
    }
    return {name, true, std::to_string(pairs) + " pairs"};
}

CheckResult superpattern_brute(std::size_t max_len)
{
    std::size_t visited = 0;
    std::string failure;
    const bool ok = for_all_strings(2, max_len, [&](const LetterString& t) {
        if (montecarlo::superpattern_k(t) != oracle::superpattern_k_brute(t)) {
            failure = "mismatch at '" + t.to_string() + "'";
            return false;
        }
        return true;
    }, visited);
    return {"superpattern_k == brute force, binary n<=" + std::to_string(max_len), ok,
            ok ? std::to_string(visited) + " strings" : failure};
}

double rel_err(double got, double want)
{
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

CheckResult closed_form_vs_exhaustive(std::size_t max_n)
{
    double worst = 0;
    for (int tenth = 1; tenth <= 9; ++tenth) {
        const auto model = IidModel<Rational>::binary(Rational(mpz_class(tenth), mpz_class(10)));
        const auto exact = oracle::exhaustive_expectation(model, max_n);
        for (std::size_t n = 1; n <= max_n; ++n) {
            worst = std::max(worst, rel_err(closed_form_binary(tenth / 10.0, n), exact.at_length(n).to_double()));
        }
    }
    return {"closed form vs exhaustive, Pr[1] in {0.1..0.9}, n<=" + std::to_string(max_n), worst <= 1e-9,
            "max relative error " + [&] { char b[32]; std::snprintf(b, sizeof b, "%.3g", worst); return std::string(b); }()};
}

CheckResult matrix_vs_exhaustive(std::size_t max_n)
{
    const std::vector<std::pair<std::string, IidModel<Rational>>> models = {
        {"d=2 uniform", IidModel<Rational>::uniform(2)},
        {"d=2 (3/10,7/10)", IidModel<Rational>::binary(Rational(mpz_class(7), mpz_class(10)))},
        {"d=3 uniform", IidModel<Rational>::uniform(3)},
        {"d=3 (1/2,1/3,1/6)", IidModel<Rational>({Rational::parse("1/2"), Rational::parse("1/3"), Rational::parse("1/6")})},
        {"d=4 uniform", IidModel<Rational>::uniform(4)},
    };
    for (const auto& [label, model] : models) {
        const std::size_t n = model.alphabet_size() == 2 ? max_n : std::min(max_n, model.alphabet_size() == 3 ? wide_alphabet_cap : std::size_t{6});
        const auto exact = oracle::exhaustive_expectation(model, n);
        const auto engine = iid_matrix_expectation(model, n);
        if (exact.values != engine.values) {
            return {"IID matrix engine == exhaustive (exact)", false, label};
        }
    }
    return {"IID matrix engine == exhaustive (exact)", true, std::to_string(models.size()) + " models"};
}

CheckResult markov_vs_exhaustive(std::size_t max_n)
{
    const std::vector<Rational> grid = {Rational::parse("3/10"), Rational::parse("1/2"), Rational::parse("7/10")};
    for (const auto& a : grid) {
        for (const auto& b : grid) {
            const MarkovModel<Rational> model(a, b);
            if (oracle::exhaustive_expectation(model, max_n).values != markov_expectation(model, max_n).values) {
                return {"Markov engine == exhaustive (exact)", false,
                        "Pr[1|1]=" + a.to_string() + ", Pr[1|0]=" + b.to_string()};
            }
        }
    }
    return {"Markov engine == exhaustive (exact), n<=" + std::to_string(max_n), true, "9 chains"};
}

} // namespace

std::vector<CheckResult> run_suite(std::string_view suite, std::size_t max_n)
{
    if (suite != "oracle" && suite != "expectation" && suite != "all") {
        throw InvalidInput("unknown suite '" + std::string(suite) + "' (oracle|expectation|all)");
    }
    if (max_n < 2) {
        throw InvalidInput("--max-n must be at least 2");
    }
    if (max_n > max_suite_length) {
        throw GuardViolation("--max-n " + std::to_string(max_n) + " exceeds the exhaustive guard (" +
                             std::to_string(max_suite_length) + ")");
    }
    const std::size_t wide = std::min(max_n, wide_alphabet_cap);
    const std::size_t sweep = std::min(max_n, expectation_cap);

    std::vector<CheckResult> results;
    if (suite == "oracle" || suite == "all") {
        results.push_back(counting_vs_enumeration(2, max_n));
        results.push_back(counting_vs_enumeration(3, wide));
        results.push_back(tree_figures());
        results.push_back(pair_structure(max_n));
        results.push_back(submultiplicativity("binary Pr[1]=3/10", IidModel<Rational>::binary(Rational::parse("3/10")), sweep));
        results.push_back(submultiplicativity("binary Pr[1]=1/2", IidModel<Rational>::uniform(2), sweep));
        results.push_back(submultiplicativity("ternary uniform", IidModel<Rational>::uniform(3), wide));
        results.push_back(superpattern_brute(std::min<std::size_t>(max_n, 14)));
    }
    if (suite == "expectation" || suite == "all") {
        results.push_back(closed_form_vs_exhaustive(sweep));
        results.push_back(matrix_vs_exhaustive(std::min(max_n, wide_alphabet_cap)));
        results.push_back(markov_vs_exhaustive(sweep));
    }
    return results;
}

} // namespace subseq::verify
