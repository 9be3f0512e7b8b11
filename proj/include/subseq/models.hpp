#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "subseq/errors.hpp"
#include "subseq/letter_string.hpp"
#include "subseq/rational.hpp"

namespace subseq {

template <class Scalar>
inline constexpr bool is_exact_v = std::is_same_v<Scalar, Rational>;

/// Letters drawn independently; probs[j] = Pr[letter j].
template <class Scalar>
class IidModel {
public:
    /// Throws InvalidInput unless every entry is in [0,1] and the entries sum to 1
    /// (exactly for Rational, within 1e-12 for double).
    explicit IidModel(std::vector<Scalar> probs) : probs_(std::move(probs))
    {
        if (probs_.empty()) {
            throw InvalidInput("probability vector must be nonempty");
        }
        Scalar sum(0);
        for (const auto& p : probs_) {
            if (p < Scalar(0) || p > Scalar(1)) {
                throw InvalidInput("letter probabilities must lie in [0,1]");
            }
            sum += p;
        }
        if constexpr (is_exact_v<Scalar>) {
            if (sum != Scalar(1)) {
                throw InvalidInput("letter probabilities sum to " + sum.to_string() + ", not 1");
            }
        } else {
            if (!(std::abs(sum - 1.0) <= 1e-12)) {
                throw InvalidInput("letter probabilities sum to " + std::to_string(sum) + ", not 1");
            }
        }
    }

    /// Binary model with Pr[1] = p_one.
    static IidModel binary(const Scalar& p_one) { return IidModel({Scalar(1) - p_one, p_one}); }

    static IidModel uniform(std::size_t d)
    {
        if (d == 0) {
            throw InvalidInput("alphabet size must be at least 1");
        }
        if constexpr (is_exact_v<Scalar>) {
            return IidModel(std::vector<Scalar>(d, Rational(1) / Rational(static_cast<long>(d))));
        } else {
            return IidModel(std::vector<Scalar>(d, 1.0 / static_cast<double>(d)));
        }
    }

    const std::vector<Scalar>& probs() const { return probs_; }
    const Scalar& prob(Letter c) const { return probs_.at(c); }
    std::size_t alphabet_size() const { return probs_.size(); }
    Alphabet alphabet() const { return Alphabet(probs_.size()); }

    template <class Other>
    IidModel<Other> cast() const
    {
        std::vector<Other> out;
        out.reserve(probs_.size());
        for (const auto& p : probs_) {
            if constexpr (std::is_same_v<Other, double>) {
                out.push_back(to_double(p));
            } else {
                out.push_back(Other(p));
            }
        }
        if constexpr (std::is_same_v<Other, double>) {
            // Renormalise: rounding each entry can leave the sum a few ulps off 1.
            double s = 0;
            for (double p : out) {
                s += p;
            }
            for (double& p : out) {
                p /= s;
            }
        }
        return IidModel<Other>(std::move(out));
    }

private:
    std::vector<Scalar> probs_;
};

/**
 * Two-state (binary) Markov chain.
 * one_after_one = Pr[s_i = 1 | s_{i-1} = 1], one_after_zero = Pr[s_i = 1 | s_{i-1} = 0].
 * The first letter is 1 with the stationary probability
 *   stationary_one = one_after_zero / (1 + one_after_zero - one_after_one).
 */
template <class Scalar>
class MarkovModel {
public:
    /// Requires both parameters in [0,1] and a defined stationary law (not (1, 0)).
    MarkovModel(Scalar one_after_one, Scalar one_after_zero)
        : one_after_one_(std::move(one_after_one)), one_after_zero_(std::move(one_after_zero))
    {
        for (const Scalar* p : {&one_after_one_, &one_after_zero_}) {
            if (*p < Scalar(0) || *p > Scalar(1)) {
                throw InvalidInput("Markov transition probabilities must lie in [0,1]");
            }
        }
        if (one_after_one_ == Scalar(1) && one_after_zero_ == Scalar(0)) {
            throw InvalidInput("Markov chain (1, 0) has no unique stationary start");
        }
    }

    const Scalar& one_after_one() const { return one_after_one_; }
    const Scalar& one_after_zero() const { return one_after_zero_; }

    Scalar stationary_one() const
    {
        return one_after_zero_ / (Scalar(1) + one_after_zero_ - one_after_one_);
    }

    /// True when both transition probabilities are strictly inside (0,1).
    bool interior() const
    {
        return one_after_one_ > Scalar(0) && one_after_one_ < Scalar(1) &&
               one_after_zero_ > Scalar(0) && one_after_zero_ < Scalar(1);
    }

    /// Pr[next = 1 | previous].
    const Scalar& one_after(Letter previous) const
    {
        return previous == 1 ? one_after_one_ : one_after_zero_;
    }

    Alphabet alphabet() const { return binary_alphabet; }

    template <class Other>
    MarkovModel<Other> cast() const
    {
        if constexpr (std::is_same_v<Other, double>) {
            return MarkovModel<Other>(to_double(one_after_one_), to_double(one_after_zero_));
        } else {
            return MarkovModel<Other>(Other(one_after_one_), Other(one_after_zero_));
        }
    }

private:
    Scalar one_after_one_;
    Scalar one_after_zero_;
};

template <class Scalar>
using Model = std::variant<IidModel<Scalar>, MarkovModel<Scalar>>;

/// Short human-readable description, e.g. "iid(0.5,0.5)" or "markov(0.7,0.3)".
std::string describe(const IidModel<double>& model);
std::string describe(const MarkovModel<double>& model);
std::string describe(const Model<double>& model);

} // namespace subseq
