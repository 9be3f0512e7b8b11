#include "subseq/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>
#include <variant>

#include "subseq/counting.hpp"
#include "subseq/errors.hpp"

namespace subseq::montecarlo {

TrialRng::TrialRng(Seed master, std::uint64_t stream, std::uint64_t trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    engine_.seed(seq);
}

namespace {

template <class Emit>
void generate(const IidModel<double>& model, std::size_t n, TrialRng& rng, Emit&& emit)
{
    const auto& probs = model.probs();
    const auto last = static_cast<Letter>(probs.size() - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.uniform();
        double cumulative = 0;
        Letter chosen = last;
        for (Letter c = 0; c < last; ++c) {
            cumulative += probs[c];
            if (u < cumulative) {
                chosen = c;
                break;
            }
        }
        emit(chosen);
    }
}

template <class Emit>
void generate(const MarkovModel<double>& model, std::size_t n, TrialRng& rng, Emit&& emit)
{
    if (n == 0) {
        return;
    }
    Letter previous = rng.uniform() < model.stationary_one() ? 1 : 0;
    emit(previous);
    for (std::size_t i = 1; i < n; ++i) {
        previous = rng.uniform() < model.one_after(previous) ? 1 : 0;
        emit(previous);
    }
}

template <class Emit>
void generate(const Model<double>& model, std::size_t n, TrialRng& rng, Emit&& emit)
{
    std::visit([&](const auto& m) { generate(m, n, rng, emit); }, model);
}

Alphabet alphabet_of(const Model<double>& model)
{
    return std::visit([](const auto& m) { return m.alphabet(); }, model);
}

/// A positive count as mantissa * 2^exponent, mantissa in [0.5, 1).
struct ScaledCount {
    double mantissa;
    long exponent;
};

ScaledCount sample_count(const Model<double>& model, std::size_t n, TrialRng& rng)
{
    const Alphabet alphabet = alphabet_of(model);
    if (n < 64) {
        IncrementalCounter<std::uint64_t> counter(alphabet);
        generate(model, n, rng, [&](Letter c) { counter.push(c); });
        int e = 0;
        const double m = std::frexp(static_cast<double>(counter.total()), &e);
        return {m, e};
    }
    IncrementalCounter<BigCount> counter(alphabet);
    generate(model, n, rng, [&](Letter c) { counter.push(c); });
    long e = 0;
    const double m = mpz_get_d_2exp(&e, counter.total().get_mpz_t());
    return {m, e};
}

// Fixed-shape pairwise reduction over trial-index order.
double pairwise_sum(std::span<const double> xs)
{
    if (xs.size() <= 16) {
        double s = 0;
        for (double x : xs) {
            s += x;
        }
        return s;
    }
    const auto half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

template <class Fn>
void run_trials(std::size_t trials, unsigned workers, Fn&& body)
{
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, trials))));
    if (workers == 1) {
        for (std::size_t t = 0; t < trials; ++t) {
            body(t);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = trials * w / workers;
        const std::size_t end = trials * (w + 1) / workers;
        pool.emplace_back([&body, begin, end] {
            for (std::size_t t = begin; t < end; ++t) {
                body(t);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
}

} // namespace

LetterString sample_string(const IidModel<double>& model, std::size_t n, TrialRng& rng)
{
    LetterString out(model.alphabet());
    generate(model, n, rng, [&](Letter c) { out.push_back(c); });
    return out;
}

LetterString sample_string(const MarkovModel<double>& model, std::size_t n, TrialRng& rng)
{
    LetterString out(model.alphabet());
    generate(model, n, rng, [&](Letter c) { out.push_back(c); });
    return out;
}

LetterString sample_string(const Model<double>& model, std::size_t n, TrialRng& rng)
{
    return std::visit([&](const auto& m) { return sample_string(m, n, rng); }, model);
}

EstimateRecord estimate_expected_count(const Model<double>& model, std::size_t n,
                                       const RunOptions& options)
{
    if (options.trials < 2) {
        throw InvalidInput("Monte Carlo estimation needs at least 2 trials");
    }
    const std::size_t trials = options.trials;
    std::vector<ScaledCount> counts(trials, ScaledCount{0.0, 0});
    run_trials(trials, options.workers, [&](std::size_t t) {
        TrialRng rng(options.seed, n, t);
        counts[t] = sample_count(model, n, rng);
    });

    EstimateRecord rec;
    rec.n = n;
    rec.trials = trials;
    rec.seed = options.seed;
    rec.model = describe(model);

    if (n == 0) {
        rec.log_mean = -INFINITY;
        return rec;
    }

    // Counts up to 2^53 are exact doubles (frexp exponent 54 only for exactly 2^53).
    long max_exponent = 0;
    bool beyond_exact = false;
    for (const auto& c : counts) {
        max_exponent = std::max(max_exponent, c.exponent);
        if (c.exponent > 54 || (c.exponent == 54 && c.mantissa > 0.5)) {
            beyond_exact = true;
        }
    }
    rec.mode = beyond_exact ? EstimateMode::log : EstimateMode::linear;
    const long shift = beyond_exact ? max_exponent : 0;

    std::vector<double> xs(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        xs[t] = std::ldexp(counts[t].mantissa, static_cast<int>(counts[t].exponent - shift));
    }
    const double mean = pairwise_sum(xs) / static_cast<double>(trials);
    for (double& x : xs) {
        x = (x - mean) * (x - mean);
    }
    const double variance = pairwise_sum(xs) / static_cast<double>(trials - 1);
    const double se = std::sqrt(variance / static_cast<double>(trials));

    rec.mean = std::ldexp(mean, static_cast<int>(shift));
    rec.standard_error = std::ldexp(se, static_cast<int>(shift));
    rec.log_mean = std::log(mean) + static_cast<double>(shift) * std::log(2.0);
    return rec;
}

GrowthFit fit_growth(std::span<const double> ns, std::span<const double> log_values)
{
    if (ns.size() != log_values.size()) {
        throw InvalidInput("growth fit: abscissae and values differ in length");
    }
    std::vector<double> sorted(ns.begin(), ns.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) - sorted.begin() < 3) {
        throw InvalidInput("growth fit needs at least 3 distinct grid points");
    }
    const auto k = static_cast<double>(ns.size());
    const double mean_n = std::accumulate(ns.begin(), ns.end(), 0.0) / k;
    const double mean_y = std::accumulate(log_values.begin(), log_values.end(), 0.0) / k;
    double sxx = 0;
    double sxy = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        sxx += (ns[i] - mean_n) * (ns[i] - mean_n);
        sxy += (ns[i] - mean_n) * (log_values[i] - mean_y);
    }
    GrowthFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_n;
    double ss = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double r = log_values[i] - (fit.intercept + fit.slope * ns[i]);
        ss += r * r;
        fit.max_abs_residual = std::max(fit.max_abs_residual, std::abs(r));
    }
    fit.rms_residual = std::sqrt(ss / k);
    fit.c = std::max(1.0, std::exp(fit.slope));
    return fit;
}

GrowthEstimate estimate_growth_constant(const Model<double>& model,
                                        std::span<const std::size_t> grid,
                                        const RunOptions& options)
{
    GrowthEstimate out;
    std::vector<double> ns;
    std::vector<double> logs;
    bool linear = true;
    for (std::size_t n : grid) {
        if (n == 0) {
            throw InvalidInput("growth grid points must be >= 1");
        }
        out.points.push_back(estimate_expected_count(model, n, options));
        const auto& p = out.points.back();
        ns.push_back(static_cast<double>(n));
        logs.push_back(p.log_mean);
        linear = linear && p.standard_error == 0.0 && p.mean == static_cast<double>(n);
    }
    out.fit = fit_growth(ns, logs);
    if (linear) {
        out.fit.linear_growth = true;
        out.fit.c = 1.0;
    }
    return out;
}

std::size_t superpattern_k(const LetterString& text)
{
    const std::size_t d = text.alphabet().size();
    std::vector<bool> seen(d, false);
    std::size_t distinct = 0;
    std::size_t rounds = 0;
    for (Letter c : text.letters()) {
        if (!seen[c]) {
            seen[c] = true;
            if (++distinct == d) {
                ++rounds;
                distinct = 0;
                std::fill(seen.begin(), seen.end(), false);
            }
        }
    }
    return rounds;
}

SuperpatternStats superpattern_experiment(const Model<double>& model, std::size_t n,
                                          const RunOptions& options)
{
    if (options.trials < 2) {
        throw InvalidInput("superpattern experiment needs at least 2 trials");
    }
    std::vector<std::size_t> ks(options.trials, 0);
    run_trials(options.trials, options.workers, [&](std::size_t t) {
        TrialRng rng(options.seed, n, t);
        ks[t] = superpattern_k(sample_string(model, n, rng));
    });

    SuperpatternStats stats;
    stats.n = n;
    stats.trials = options.trials;
    stats.seed = options.seed;
    stats.model = describe(model);
    std::vector<double> values(ks.size());
    for (std::size_t t = 0; t < ks.size(); ++t) {
        ++stats.histogram[ks[t]];
        values[t] = static_cast<double>(ks[t]);
    }
    stats.mean_k = pairwise_sum(values) / static_cast<double>(ks.size());
    stats.mean_k_over_n = n == 0 ? 0.0 : stats.mean_k / static_cast<double>(n);
    return stats;
}

} // namespace subseq::montecarlo
