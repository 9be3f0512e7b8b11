#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subseq {

/// Letters are 0-indexed: the alphabet {1, ..., d} used in the literature maps to 0..d-1,
/// and the binary alphabet {0, 1} maps to itself.
using Letter = std::uint32_t;

class Alphabet {
public:
    /// Throws InvalidInput when d == 0.
    explicit Alphabet(std::size_t d);

    std::size_t size() const { return size_; }
    bool contains(Letter c) const { return c < size_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::size_t size_;
};

inline const Alphabet binary_alphabet{2};

/// A finite word over an Alphabet; every letter is checked against the alphabet on construction.
class LetterString {
public:
    explicit LetterString(Alphabet alphabet) : alphabet_(alphabet) {}
    LetterString(Alphabet alphabet, std::vector<Letter> letters);

    const Alphabet& alphabet() const { return alphabet_; }
    std::span<const Letter> letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    void push_back(Letter c);

    /// Digits when d <= 10 (e.g. "0110"), otherwise comma-separated ("10,3,0").
    std::string to_string() const;

    friend bool operator==(const LetterString&, const LetterString&) = default;

private:
    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

/**
 * Parses either an ASCII digit string ("0110") or comma-separated integers ("2,11,0").
 * When `d` is not given the alphabet is the smallest one containing every letter,
 * but never smaller than binary. Throws InvalidInput on malformed text or a letter >= d.
 */
LetterString parse_letter_string(std::string_view text, std::optional<std::size_t> d = std::nullopt);

} // namespace subseq
