#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "subseq/expectation.hpp"
#include "subseq/letter_string.hpp"
#include "subseq/models.hpp"
#include "subseq/rational.hpp"

namespace subseq::oracle {

/// Longest string enumerate_distinct accepts.
inline constexpr std::size_t max_enumeration_length = 22;
/// Largest number of strings (d^n) an exhaustive sweep visits.
inline constexpr std::size_t max_exhaustive_strings = std::size_t{1} << 20;

using Subsequence = std::vector<Letter>;

/// Every distinct nonempty subsequence of `text`, built by extending a set letter by letter.
/// Throws GuardViolation past max_enumeration_length.
std::set<Subsequence> enumerate_distinct(const LetterString& text);

/// Exact E[phi(S_i)], i = 1..n, by summing phi(T) * Pr[S_i = T] over all d^i strings.
/// Throws GuardViolation when d^n exceeds max_exhaustive_strings.
ExpectationSeries<Rational> exhaustive_expectation(const IidModel<Rational>& model, std::size_t n);
/// Markov variant: Pr[T] = Pr[t_1] * prod Pr[t_i | t_{i-1}], Pr[t_1 = 1] = stationary_one.
/// Boundary chains are allowed here.
ExpectationSeries<Rational> exhaustive_expectation(const MarkovModel<Rational>& model, std::size_t n);

/**
 * Row n of the tree of new-subsequence counts. Entry m (0-based) is nu of the m-th
 * length-n string in tree order: children of a node are listed by descending letter
 * (binary: "append 1" left of "append 0"; ternary: 2, 1, 0). Row 0 is [0].
 */
struct TreeRow {
    std::size_t n = 0;
    std::vector<BigCount> values;
};

TreeRow tree_row(std::size_t d, std::size_t n);

/// The length-n string at 0-based position m of row n in tree order.
LetterString tree_string(std::size_t d, std::size_t n, std::size_t m);

/**
 * Binary row n >= 2 against row n-1, with 1-based position m:
 *   m = 2 (mod 4):          row_n[m] = row_n[m+1] = row_{n-1}[m/2] + row_{n-1}[m/2 + 1]
 *   m = 0 (mod 4), m != 2^n: row_n[m] = row_n[m+1] = row_{n-1}[m/2] = row_{n-1}[m/2 + 1]
 * and the row starts and ends with 1.
 */
bool check_pair_structure(std::size_t n);

/// Exhaustive psi values under both counting conventions.
struct SubmultiplicativityTerms {
    Rational psi_n, psi_m, psi_sum;                   ///< nonempty: E[phi]
    Rational psi_n_empty, psi_m_empty, psi_sum_empty; ///< empty-inclusive: E[phi] + 1
    bool holds_nonempty() const { return psi_sum <= psi_n * psi_m; }
    bool holds_empty_inclusive() const { return psi_sum_empty <= psi_n_empty * psi_m_empty; }
};

SubmultiplicativityTerms submultiplicativity_terms(const IidModel<Rational>& model, std::size_t n,
                                                   std::size_t m);

/// psi(n+m) <= psi(n) psi(m) with psi(i) = E[phi(S_i)] + 1. The nonempty count violates the
/// inequality (binary fair coin: 65/8 > (5/2)^2 at n = m = 2); counting the empty
/// subsequence matches the pair-of-subsequences injection, whose components may be empty.
bool check_submultiplicativity(const IidModel<Rational>& model, std::size_t n, std::size_t m);

/// Greedy leftmost test of pattern being a subsequence of text.
bool is_subsequence(std::span<const Letter> pattern, std::span<const Letter> text);

/// Largest k such that all d^k words of length k are subsequences of `text`, by trying
/// every word. Throws GuardViolation when a level would exceed max_exhaustive_strings.
std::size_t superpattern_k_brute(const LetterString& text);

/// True when d^n <= limit (computed without overflow); stores d^n in *out when given.
bool power_within(std::size_t d, std::size_t n, std::size_t limit, std::size_t* out = nullptr);

} // namespace subseq::oracle
