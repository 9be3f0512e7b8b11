#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "subseq/letter_string.hpp"
#include "subseq/models.hpp"

namespace subseq::montecarlo {

using Seed = std::uint64_t;

/**
 * Independent random stream for one trial, keyed by (master seed, stream, trial index).
 * Streams never depend on how trials are scheduled, so results are identical for any
 * worker count.
 */
class TrialRng {
public:
    TrialRng(Seed master, std::uint64_t stream, std::uint64_t trial);

    std::uint64_t next() { return engine_(); }
    /// Uniform on [0,1) from the top 53 bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

LetterString sample_string(const IidModel<double>& model, std::size_t n, TrialRng& rng);
/// First letter is 1 with the stationary probability, then transitions.
LetterString sample_string(const MarkovModel<double>& model, std::size_t n, TrialRng& rng);
LetterString sample_string(const Model<double>& model, std::size_t n, TrialRng& rng);

struct RunOptions {
    std::size_t trials = 10000;
    Seed seed = 0;
    unsigned workers = 1;
};

enum class EstimateMode {
    linear, ///< every sampled count was <= 2^53 and is exact as a double
    log     ///< counts were scaled by their maximum power of two before averaging
};

struct EstimateRecord {
    std::size_t n = 0;
    std::size_t trials = 0;
    Seed seed = 0;
    std::string model;
    double mean = 0;
    double standard_error = 0; ///< sample standard deviation / sqrt(trials)
    EstimateMode mode = EstimateMode::linear;
    double log_mean = 0;       ///< natural log of mean; finite even when mean overflows
};

/// Monte Carlo estimate of E[phi(S_n)]. Requires trials >= 2.
EstimateRecord estimate_expected_count(const Model<double>& model, std::size_t n,
                                       const RunOptions& options);

struct GrowthFit {
    double c = 1;             ///< estimated growth constant
    double slope = 0;         ///< least-squares slope of log(mean) on n
    double intercept = 0;
    double rms_residual = 0;
    double max_abs_residual = 0;
    bool linear_growth = false; ///< every point equals n exactly: constant strings, c = 1
};

/// Least-squares fit of log_values against ns; c = max(1, exp(slope)).
/// Throws InvalidInput unless there are >= 3 distinct abscissae.
GrowthFit fit_growth(std::span<const double> ns, std::span<const double> log_values);

struct GrowthEstimate {
    GrowthFit fit;
    std::vector<EstimateRecord> points;
};

GrowthEstimate estimate_growth_constant(const Model<double>& model,
                                        std::span<const std::size_t> grid,
                                        const RunOptions& options);

/**
 * Largest k such that every length-k word over the alphabet is a subsequence of `text`.
 *
 * Scan left to right in rounds; a round closes once all d letters have appeared since
 * it opened, and k is the number of closed rounds. Any word x_1..x_k embeds by taking
 * x_i inside round i. For the converse, let x_i be the letter whose first appearance
 * closes round i and y a letter absent from the unfinished tail: the leftmost embedding
 * of x_1..x_k ends exactly at the end of round k, so x_1..x_k y does not embed.
 */
std::size_t superpattern_k(const LetterString& text);

struct SuperpatternStats {
    std::size_t n = 0;
    std::size_t trials = 0;
    Seed seed = 0;
    std::string model;
    std::map<std::size_t, std::size_t> histogram; ///< k -> number of trials
    double mean_k = 0;
    double mean_k_over_n = 0;
};

SuperpatternStats superpattern_experiment(const Model<double>& model, std::size_t n,
                                          const RunOptions& options);

} // namespace subseq::montecarlo
