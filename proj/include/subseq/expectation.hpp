#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "subseq/errors.hpp"
#include "subseq/models.hpp"
#include "subseq/rational.hpp"

namespace subseq {

/// E[phi(S_1)], ..., E[phi(S_n)]. Exact when Scalar is Rational, IEEE double otherwise.
template <class Scalar>
struct ExpectationSeries {
    std::vector<Scalar> values;

    std::size_t size() const { return values.size(); }
    /// E[phi(S_n)] for 1 <= n <= size().
    const Scalar& at_length(std::size_t n) const { return values.at(n - 1); }
};

/// Per-row new weight split by final letter: a[i-1] for strings ending in 1, b[i-1] ending in 0.
template <class Scalar>
struct ABWeights {
    std::vector<Scalar> a;
    std::vector<Scalar> b;
};

struct AsymptoticConstants {
    double base;      ///< 1 + sqrt(p(1-p))
    double prefactor; ///< (1 + 2 sqrt(p(1-p))) / (2 sqrt(p(1-p)))
};

/**
 * Expected number of distinct nonempty subsequences of a length-n IID binary string
 * with Pr[1] = p_one. With r = sqrt(p(1-p)):
 *   [(1 - 2r)(1 - (1-r)^n) + (1 + 2r)((1+r)^n - 1)] / (2r),
 * and n itself when p_one is 0 or 1 (the string is constant).
 */
double closed_form_binary(double p_one, std::size_t n);

/// E[phi(S_n)] ~ prefactor * base^n. Throws InvalidInput for p_one outside (0,1).
AsymptoticConstants asymptotic_constants(double p_one);

/// a_i = a_{i-1} + p b_{i-1}, b_i = b_{i-1} + (1-p) a_{i-1}, from a_1 = p, b_1 = 1-p.
template <class Scalar>
ABWeights<Scalar> ab_recurrence(const Scalar& p_one, std::size_t n)
{
    if (!(p_one > Scalar(0) && p_one < Scalar(1))) {
        throw InvalidInput("ab_recurrence requires Pr[1] in (0,1)");
    }
    if (n == 0) {
        throw InvalidInput("ab_recurrence requires n >= 1");
    }
    ABWeights<Scalar> w;
    w.a.reserve(n);
    w.b.reserve(n);
    w.a.push_back(p_one);
    w.b.push_back(Scalar(1) - p_one);
    for (std::size_t i = 1; i < n; ++i) {
        const Scalar& a = w.a.back();
        const Scalar& b = w.b.back();
        Scalar next_a = a + p_one * b;
        Scalar next_b = b + (Scalar(1) - p_one) * a;
        w.a.push_back(std::move(next_a));
        w.b.push_back(std::move(next_b));
    }
    return w;
}

/// Explicit solution of the a/b recurrence at row i >= 1: {a_i, b_i}.
std::pair<double, double> ab_explicit(double p_one, std::size_t i);

/**
 * IID d-ary engine. With transfer matrix M (ones on the diagonal, M(j,k) = p_j off it)
 * and probability vector p,
 *   E[phi(S_m)] = 1^T (sum_{i=0}^{m-1} M^i) p,
 * accumulated by repeated matrix-vector products.
 */
template <class Scalar>
ExpectationSeries<Scalar> iid_matrix_expectation(const IidModel<Scalar>& model, std::size_t n)
{
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    const auto d = static_cast<Eigen::Index>(model.alphabet_size());
    Vector probs(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        probs(j) = model.probs()[static_cast<std::size_t>(j)];
    }
    Matrix transfer = probs * Vector::Constant(d, Scalar(1)).transpose();
    transfer.diagonal().setConstant(Scalar(1));

    ExpectationSeries<Scalar> series;
    series.values.reserve(n);
    Vector row_weight = probs;
    Scalar total(0);
    for (std::size_t m = 1; m <= n; ++m) {
        total += row_weight.sum();
        series.values.push_back(total);
        if (m < n) {
            row_weight = transfer * row_weight;
        }
    }
    return series;
}

/// The 4x4 transfer matrix on (w11, w10, w01, w00), the new weight of strings by final two letters.
template <class Scalar>
Eigen::Matrix<Scalar, 4, 4> markov_transfer_matrix(const MarkovModel<Scalar>& model)
{
    const Scalar& a = model.one_after_one();
    const Scalar& b = model.one_after_zero();
    const Scalar one(1);
    const Scalar zero(0);
    Eigen::Matrix<Scalar, 4, 4> m;
    m << a, zero, a, zero,
         one - a, a, one - a, b * (one - a) / (one - b),
         (one - a) * b / a, b, one - b, b,
         zero, one - b, zero, one - b;
    return m;
}

/// Row-1 weights under a phantom letter s_0 ~ stationary law that contributes no subsequences.
template <class Scalar>
Eigen::Matrix<Scalar, 4, 1> markov_initial_weights(const MarkovModel<Scalar>& model)
{
    const Scalar& a = model.one_after_one();
    const Scalar& b = model.one_after_zero();
    const Scalar g = model.stationary_one();
    const Scalar one(1);
    Eigen::Matrix<Scalar, 4, 1> v;
    v << g * a, g * (one - a), (one - g) * b, (one - g) * (one - b);
    return v;
}

/**
 * Two-state Markov engine: E[phi(S_m)] = 1^T (sum_{i=0}^{m-1} M^i) v_1.
 * Both transition probabilities must lie strictly inside (0,1): the matrix divides by
 * Pr[1|1] and 1 - Pr[1|0]. Boundary chains go through the exhaustive oracle instead.
 */
template <class Scalar>
ExpectationSeries<Scalar> markov_expectation(const MarkovModel<Scalar>& model, std::size_t n)
{
    if (!model.interior()) {
        throw InvalidInput(
            "Markov matrix engine needs both transition probabilities strictly inside (0,1); "
            "use the exhaustive oracle (verify) for boundary chains");
    }
    const auto transfer = markov_transfer_matrix(model);
    Eigen::Matrix<Scalar, 4, 1> row_weight = markov_initial_weights(model);

    ExpectationSeries<Scalar> series;
    series.values.reserve(n);
    Scalar total(0);
    for (std::size_t m = 1; m <= n; ++m) {
        total += row_weight.sum();
        series.values.push_back(total);
        if (m < n) {
            row_weight = (transfer * row_weight).eval();
        }
    }
    return series;
}

} // namespace subseq
