#pragma once

#include <cstddef>
#include <optional>

#include "subseq/letter_string.hpp"
#include "subseq/models.hpp"
#include "subseq/rational.hpp"

namespace subseq::analysis {

struct RootResult {
    double x = 0;
    double residual = 0; ///< the root function evaluated at x
    double lo = 0;       ///< final bracket, lo < x < hi
    double hi = 0;
    std::size_t iterations = 0;
};

/// Bisection stops once the bracket is narrower than this.
inline constexpr double bracket_tolerance = 1e-13;

/// H(x) = -x log2 x - (1-x) log2 (1-x), with H(0) = H(1) = 0.
double binary_entropy(double x);

/// g(x) = 2^x x^x (1-x)^(1-x) on [0,1], extended by continuity (0^0 = 1). g(x) = 2^(x - H(x)).
double balance_function(double x);

struct BalanceRoots {
    double minimizer = 0;            ///< interior minimiser of g (1/3, where g = 2/3)
    std::optional<RootResult> lower; ///< root in (0, minimizer]; absent when it sits at x = 0
    RootResult upper;                ///< root in [minimizer, 1)
};

/**
 * Both roots of g(x) = target on (0,1). The minimiser is found by golden-section search
 * and each branch is bisected. A target equal to min g (within 1e-12) gives a double
 * root reported on both branches; at target = 1 the lower root is the excluded endpoint 0.
 * Throws InvalidInput for target outside (0,1] and NoRootError below min g.
 */
BalanceRoots solve_balance(double target);

/// The root in (1/2, 1) of H(x) = x, equivalently g(x) = 1 (about 0.7729).
RootResult occurrence_threshold();

/// C(n, k) as a big integer.
BigCount binomial(std::size_t n, std::size_t k);

/**
 * Expected number of index-set embeddings of `pattern` in a random length-n string:
 * C(n, k) * prod_j Pr[pattern_j]. Throws InvalidInput when k > n or a pattern letter is
 * outside the model's alphabet.
 */
Rational expected_occurrences_exact(std::size_t n, const LetterString& pattern,
                                    const IidModel<Rational>& model);
/// The same value as a double (may overflow to inf or underflow to 0 for long strings).
double expected_occurrences(std::size_t n, const LetterString& pattern, const IidModel<Rational>& model);
/// log2 of the expected count, finite for any n (minus infinity when the count is 0).
double log2_expected_occurrences(std::size_t n, const LetterString& pattern,
                                 const IidModel<Rational>& model);

} // namespace subseq::analysis
