#pragma once

#include <cstddef>
#include <vector>

#include "subseq/letter_string.hpp"
#include "subseq/oracle.hpp"

namespace subseq::testing {

/// Every string of length exactly `len` over [d], in lexicographic order.
inline std::vector<LetterString> all_strings(std::size_t d, std::size_t len)
{
    std::size_t count = 1;
    for (std::size_t i = 0; i < len; ++i) {
        count *= d;
    }
    std::vector<LetterString> out;
    out.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<Letter> letters(len);
        std::size_t rest = code;
        for (std::size_t i = len; i-- > 0;) {
            letters[i] = static_cast<Letter>(rest % d);
            rest /= d;
        }
        out.emplace_back(Alphabet(d), std::move(letters));
    }
    return out;
}

inline LetterString prefix(const LetterString& t, std::size_t len)
{
    auto l = t.letters().first(len);
    return LetterString(t.alphabet(), std::vector<Letter>(l.begin(), l.end()));
}

/// nu of every prefix from set enumeration alone: |subseq(T_i)| - |subseq(T_{i-1})|.
inline std::vector<std::size_t> brute_profile(const LetterString& t)
{
    std::vector<std::size_t> out;
    std::size_t before = 0;
    for (std::size_t i = 1; i <= t.size(); ++i) {
        const std::size_t now = oracle::enumerate_distinct(prefix(t, i)).size();
        out.push_back(now - before);
        before = now;
    }
    return out;
}

inline LetterString bin(const char* digits)
{
    return parse_letter_string(digits, 2);
}

} // namespace subseq::testing
