#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace subseq::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Largest max_n the suites accept (binary sweeps visit 2^max_n strings).
inline constexpr std::size_t max_suite_length = 20;

/**
 * Runs the oracle cross-checks. `suite` is "oracle" (counting, tree rows, pair structure,
 * submultiplicativity, superpattern), "expectation" (closed form, IID matrix and Markov
 * engines against exhaustive sums) or "all". Binary sweeps cover lengths up to max_n;
 * ternary and wider alphabets are capped at length 8.
 */
std::vector<CheckResult> run_suite(std::string_view suite, std::size_t max_n);

} // namespace subseq::verify
