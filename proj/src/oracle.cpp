#include "subseq/oracle.hpp"

#include <cstdint>
#include <functional>
#include <string>

#include "subseq/counting.hpp"
#include "subseq/errors.hpp"

namespace subseq::oracle {

bool power_within(std::size_t d, std::size_t n, std::size_t limit, std::size_t* out)
{
    std::size_t value = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (d != 0 && value > limit / d) {
            return false;
        }
        value *= d;
    }
    if (value > limit) {
        return false;
    }
    if (out) {
        *out = value;
    }
    return true;
}

namespace {

void require_exhaustive(std::size_t d, std::size_t n)
{
    if (!power_within(d, n, max_exhaustive_strings)) {
        throw GuardViolation(std::to_string(d) + "^" + std::to_string(n) +
                             " strings exceeds the exhaustive guard of 2^20");
    }
}

// Pr[next | previous]; previous is empty for the first letter.
using LetterProbability = std::function<const Rational&(const Letter* previous, Letter next)>;

ExpectationSeries<Rational> sweep(std::size_t d, std::size_t n, const LetterProbability& prob)
{
    require_exhaustive(d, n);
    std::vector<Rational> sums(n, Rational(0));
    const Alphabet alphabet(d);

    std::function<void(std::size_t, const IncrementalCounter<std::uint64_t>&, const Rational&,
                       const Letter*)>
        descend = [&](std::size_t depth, const IncrementalCounter<std::uint64_t>& counter,
                      const Rational& weight, const Letter* previous) {
            for (Letter c = 0; c < d; ++c) {
                const Rational& step = prob(previous, c);
                if (step.sign() == 0) {
                    continue;
                }
                const Rational child_weight = weight * step;
                IncrementalCounter<std::uint64_t> child = counter;
                const auto phi = child.push(c).total;
                sums[depth] += child_weight * Rational(static_cast<unsigned long>(phi));
                if (depth + 1 < n) {
                    descend(depth + 1, child, child_weight, &c);
                }
            }
        };
    if (n > 0) {
        descend(0, IncrementalCounter<std::uint64_t>(alphabet), Rational(1), nullptr);
    }
    return {std::move(sums)};
}

} // namespace

std::set<Subsequence> enumerate_distinct(const LetterString& text)
{
    if (text.size() > max_enumeration_length) {
        throw GuardViolation("enumeration limited to strings of length <= " +
                             std::to_string(max_enumeration_length) + ", got " +
                             std::to_string(text.size()));
    }
    std::set<Subsequence> found;
    for (Letter c : text.letters()) {
        std::vector<Subsequence> extended;
        extended.reserve(found.size() + 1);
        extended.push_back({c});
        for (const auto& s : found) {
            Subsequence longer = s;
            longer.push_back(c);
            extended.push_back(std::move(longer));
        }
        found.insert(extended.begin(), extended.end());
    }
    return found;
}

ExpectationSeries<Rational> exhaustive_expectation(const IidModel<Rational>& model, std::size_t n)
{
    return sweep(model.alphabet_size(), n,
                 [&](const Letter*, Letter next) -> const Rational& { return model.prob(next); });
}

ExpectationSeries<Rational> exhaustive_expectation(const MarkovModel<Rational>& model, std::size_t n)
{
    const Rational start_one = model.stationary_one();
    const Rational start_zero = Rational(1) - start_one;
    const Rational zero_after_one = Rational(1) - model.one_after_one();
    const Rational zero_after_zero = Rational(1) - model.one_after_zero();
    return sweep(2, n, [&](const Letter* previous, Letter next) -> const Rational& {
        if (!previous) {
            return next == 1 ? start_one : start_zero;
        }
        if (*previous == 1) {
            return next == 1 ? model.one_after_one() : zero_after_one;
        }
        return next == 1 ? model.one_after_zero() : zero_after_zero;
    });
}

TreeRow tree_row(std::size_t d, std::size_t n)
{
    require_exhaustive(d, n);
    TreeRow row{n, {}};
    if (n == 0) {
        row.values.emplace_back(0);
        return row;
    }
    std::size_t count = 0;
    power_within(d, n, max_exhaustive_strings, &count);
    row.values.reserve(count);

    const Alphabet alphabet(d);
    std::function<void(std::size_t, const IncrementalCounter<std::uint64_t>&)> descend =
        [&](std::size_t depth, const IncrementalCounter<std::uint64_t>& counter) {
            for (std::size_t k = 0; k < d; ++k) {
                const auto c = static_cast<Letter>(d - 1 - k);
                IncrementalCounter<std::uint64_t> child = counter;
                const auto fresh = child.push(c).fresh;
                if (depth + 1 == n) {
                    row.values.emplace_back(static_cast<unsigned long>(fresh));
                } else {
                    descend(depth + 1, child);
                }
            }
        };
    descend(0, IncrementalCounter<std::uint64_t>(alphabet));
    return row;
}

LetterString tree_string(std::size_t d, std::size_t n, std::size_t m)
{
    std::vector<Letter> letters(n);
    for (std::size_t i = n; i-- > 0;) {
        letters[i] = static_cast<Letter>(d - 1 - m % d);
        m /= d;
    }
    if (m != 0) {
        throw InvalidInput("tree position out of range for row " + std::to_string(n));
    }
    return LetterString(Alphabet(d), std::move(letters));
}

bool check_pair_structure(std::size_t n)
{
    if (n < 2) {
        throw InvalidInput("pair structure is defined for rows n >= 2");
    }
    const TreeRow parent_row = tree_row(2, n - 1);
    const TreeRow row = tree_row(2, n);
    // 1-based accessors
    auto cur = [&](std::size_t m) -> const BigCount& { return row.values.at(m - 1); };
    auto prev = [&](std::size_t m) -> const BigCount& { return parent_row.values.at(m - 1); };

    const std::size_t width = row.values.size();
    if (cur(1) != 1 || cur(width) != 1) {
        return false;
    }
    for (std::size_t m = 1; m <= width; ++m) {
        if (m % 4 == 2) {
            if (cur(m) != cur(m + 1) || cur(m) != prev(m / 2) + prev(m / 2 + 1)) {
                return false;
            }
        } else if (m % 4 == 0 && m != width) {
            if (cur(m) != cur(m + 1) || cur(m) != prev(m / 2) || prev(m / 2) != prev(m / 2 + 1)) {
                return false;
            }
        }
    }
    return true;
}

SubmultiplicativityTerms submultiplicativity_terms(const IidModel<Rational>& model, std::size_t n,
                                                   std::size_t m)
{
    if (n == 0 || m == 0) {
        throw InvalidInput("submultiplicativity needs n, m >= 1");
    }
    const auto series = exhaustive_expectation(model, n + m);
    SubmultiplicativityTerms t;
    t.psi_n = series.at_length(n);
    t.psi_m = series.at_length(m);
    t.psi_sum = series.at_length(n + m);
    t.psi_n_empty = t.psi_n + Rational(1);
    t.psi_m_empty = t.psi_m + Rational(1);
    t.psi_sum_empty = t.psi_sum + Rational(1);
    return t;
}

bool check_submultiplicativity(const IidModel<Rational>& model, std::size_t n, std::size_t m)
{
    return submultiplicativity_terms(model, n, m).holds_empty_inclusive();
}

} // namespace subseq::oracle

namespace subseq::oracle {

bool is_subsequence(std::span<const Letter> pattern, std::span<const Letter> text)
{
    std::size_t i = 0;
    for (Letter c : text) {
        if (i < pattern.size() && pattern[i] == c) {
            ++i;
        }
    }
    return i == pattern.size();
}

std::size_t superpattern_k_brute(const LetterString& text)
{
    const std::size_t d = text.alphabet().size();
    std::size_t k = 0;
    while (true) {
        const std::size_t len = k + 1;
        std::size_t words = 0;
        if (len > text.size() || !power_within(d, len, max_exhaustive_strings, &words)) {
            if (len > text.size()) {
                return k; // no word longer than the text can embed
            }
            throw GuardViolation("superpattern brute force exceeds the 2^20 word guard");
        }
        std::vector<Letter> word(len, 0);
        for (std::size_t w = 0; w < words; ++w) {
            std::size_t code = w;
            for (std::size_t i = 0; i < len; ++i) {
                word[i] = static_cast<Letter>(code % d);
                code /= d;
            }
            if (!is_subsequence(word, text.letters())) {
                return k;
            }
        }
        ++k;
    }
}

} // namespace subseq::oracle
