#include "subseq/analysis.hpp"

#include <cmath>
#include <limits>

#include "subseq/errors.hpp"

namespace subseq::analysis {

namespace {

// x log2 x with the continuous extension at 0.
double xlog2x(double x)
{
    return x <= 0.0 ? 0.0 : x * std::log2(x);
}

template <class Fn>
RootResult bisect(Fn&& f, double lo, double hi)
{
    double f_lo = f(lo);
    RootResult r;
    while (hi - lo > bracket_tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double f_mid = f(mid);
        ++r.iterations;
        if (f_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    r.x = 0.5 * (lo + hi);
    r.residual = f(r.x);
    r.lo = lo;
    r.hi = hi;
    return r;
}

// Golden-section search for the minimiser of a unimodal function on [lo, hi].
template <class Fn>
double golden_section_min(Fn&& f, double lo, double hi)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - inv_phi * (hi - lo);
    double b = lo + inv_phi * (hi - lo);
    double fa = f(a);
    double fb = f(b);
    while (hi - lo > 1e-12) {
        if (fa < fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = f(b);
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

double binary_entropy(double x)
{
    if (!(x >= 0.0 && x <= 1.0)) {
        throw InvalidInput("binary entropy is defined on [0,1]");
    }
    return -xlog2x(x) - xlog2x(1.0 - x);
}

double balance_function(double x)
{
    return std::exp2(x - binary_entropy(x));
}

BalanceRoots solve_balance(double target)
{
    if (!(target > 0.0 && target <= 1.0)) {
        throw InvalidInput("balance target must lie in (0,1]");
    }
    auto f = [target](double x) { return balance_function(x) - target; };

    BalanceRoots roots;
    roots.minimizer = golden_section_min([](double x) { return balance_function(x); }, 0.0, 1.0);
    const double at_min = f(roots.minimizer);
    if (at_min > 1e-12) {
        throw NoRootError("target " + std::to_string(target) +
                          " is below the minimum of 2^x x^x (1-x)^(1-x) (2/3 at x = 1/3)");
    }
    if (at_min >= -1e-12) {
        RootResult twin{roots.minimizer, at_min, roots.minimizer - bracket_tolerance,
                        roots.minimizer + bracket_tolerance, 0};
        roots.lower = twin;
        roots.upper = twin;
        return roots;
    }
    if (f(0.0) > 0.0) {
        roots.lower = bisect(f, 0.0, roots.minimizer);
    }
    roots.upper = bisect(f, roots.minimizer, 1.0);
    return roots;
}

RootResult occurrence_threshold()
{
    return bisect([](double x) { return binary_entropy(x) - x; }, 0.5, 1.0);
}

BigCount binomial(std::size_t n, std::size_t k)
{
    BigCount out;
    if (k > n) {
        return out;
    }
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Rational expected_occurrences_exact(std::size_t n, const LetterString& pattern,
                                    const IidModel<Rational>& model)
{
    if (pattern.size() > n) {
        throw InvalidInput("pattern length " + std::to_string(pattern.size()) +
                           " exceeds string length " + std::to_string(n));
    }
    Rational value(binomial(n, pattern.size()));
    for (Letter c : pattern.letters()) {
        if (c >= model.alphabet_size()) {
            throw InvalidInput("pattern letter " + std::to_string(c) + " outside the model's alphabet");
        }
        value *= model.prob(c);
    }
    return value;
}

double expected_occurrences(std::size_t n, const LetterString& pattern, const IidModel<Rational>& model)
{
    return expected_occurrences_exact(n, pattern, model).to_double();
}

double log2_expected_occurrences(std::size_t n, const LetterString& pattern,
                                 const IidModel<Rational>& model)
{
    const Rational v = expected_occurrences_exact(n, pattern, model);
    if (v.sign() == 0) {
        return -std::numeric_limits<double>::infinity();
    }
    return log2_of(v);
}

} // namespace subseq::analysis
