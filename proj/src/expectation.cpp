#include "subseq/expectation.hpp"

#include <cmath>

namespace subseq {

namespace {

void check_probability(double p)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidInput("Pr[1] must lie in [0,1]");
    }
}

} // namespace

double closed_form_binary(double p_one, std::size_t n)
{
    check_probability(p_one);
    const double len = static_cast<double>(n);
    if (p_one == 0.0 || p_one == 1.0) {
        return len;
    }
    const double r = std::sqrt(p_one * (1.0 - p_one));
    const double shrink = 1.0 - std::pow(1.0 - r, len);
    const double grow = std::pow(1.0 + r, len) - 1.0;
    return ((1.0 - 2.0 * r) * shrink + (1.0 + 2.0 * r) * grow) / (2.0 * r);
}

AsymptoticConstants asymptotic_constants(double p_one)
{
    check_probability(p_one);
    if (p_one == 0.0 || p_one == 1.0) {
        throw InvalidInput("constant strings grow linearly; no exponential asymptotics at Pr[1] in {0,1}");
    }
    const double r = std::sqrt(p_one * (1.0 - p_one));
    return {1.0 + r, (1.0 + 2.0 * r) / (2.0 * r)};
}

std::pair<double, double> ab_explicit(double p_one, std::size_t i)
{
    if (!(p_one > 0.0 && p_one < 1.0) || i == 0) {
        throw InvalidInput("ab_explicit requires Pr[1] in (0,1) and i >= 1");
    }
    const double r = std::sqrt(p_one * (1.0 - p_one));
    const double k = static_cast<double>(i - 1);
    const double lo = std::pow(1.0 - r, k);
    const double hi = std::pow(1.0 + r, k);
    const double q = 1.0 - p_one;
    return {0.5 * ((p_one - r) * lo + (p_one + r) * hi), 0.5 * ((q - r) * lo + (q + r) * hi)};
}

} // namespace subseq
