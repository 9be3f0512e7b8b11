#include "subseq/letter_string.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "subseq/errors.hpp"

namespace subseq {

Alphabet::Alphabet(std::size_t d) : size_(d)
{
    if (d == 0) {
        throw InvalidInput("alphabet size must be at least 1");
    }
}

LetterString::LetterString(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters))
{
    for (Letter c : letters_) {
        if (!alphabet_.contains(c)) {
            throw InvalidInput("letter " + std::to_string(c) + " outside alphabet of size " +
                               std::to_string(alphabet_.size()));
        }
    }
}

void LetterString::push_back(Letter c)
{
    if (!alphabet_.contains(c)) {
        throw InvalidInput("letter " + std::to_string(c) + " outside alphabet of size " +
                           std::to_string(alphabet_.size()));
    }
    letters_.push_back(c);
}

std::string LetterString::to_string() const
{
    std::string out;
    const bool digits = alphabet_.size() <= 10;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (digits) {
            out.push_back(static_cast<char>('0' + letters_[i]));
        } else {
            if (i > 0) {
                out.push_back(',');
            }
            out += std::to_string(letters_[i]);
        }
    }
    return out;
}

LetterString parse_letter_string(std::string_view text, std::optional<std::size_t> d)
{
    std::vector<Letter> letters;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            const auto end = std::min(text.find(',', start), text.size());
            auto field = text.substr(start, end - start);
            while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) {
                field.remove_prefix(1);
            }
            while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) {
                field.remove_suffix(1);
            }
            Letter value = 0;
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
                throw InvalidInput("malformed letter '" + std::string(field) + "' in '" +
                                   std::string(text) + "'");
            }
            letters.push_back(value);
            start = end + 1;
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw InvalidInput("non-digit character '" + std::string(1, c) + "' in '" +
                                   std::string(text) + "'");
            }
            letters.push_back(static_cast<Letter>(c - '0'));
        }
    }

    std::size_t size = 2;
    if (d) {
        size = *d;
    } else if (!letters.empty()) {
        size = std::max<std::size_t>(2, *std::max_element(letters.begin(), letters.end()) + 1u);
    }
    return LetterString(Alphabet(size), std::move(letters));
}

} // namespace subseq
