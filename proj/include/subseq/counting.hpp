#pragma once

#include <cstddef>
#include <vector>

#include "subseq/errors.hpp"
#include "subseq/letter_string.hpp"
#include "subseq/rational.hpp"

namespace subseq {

/**
 * Streaming distinct-subsequence counter.
 *
 * Pushing letter c onto prefix T_{i-1} yields the number of subsequences that are new in T_i:
 *   nu(T_i) = nu(T_l) + ... + nu(T_{i-1})        if c last occurred at position l > 0,
 *   nu(T_i) = nu(T_1) + ... + nu(T_{i-1}) + 1    if c has not occurred before.
 * Both branches equal total + 1 - offset[c], where total is the running sum of nu
 * and offset[c] is 0 for an unseen letter and (total just before its last
 * occurrence) + 1 otherwise. Every push is O(1) additions.
 *
 * `Count` is BigCount by default; fixed-width unsigned types are fine when the
 * caller knows the length is below the type's bit width (phi(T) <= 2^n - 1).
 */
template <class Count = BigCount>
class IncrementalCounter {
public:
    struct Step {
        Count fresh; ///< nu of the new prefix
        Count total; ///< phi of the new prefix (nonempty subsequences)
    };

    explicit IncrementalCounter(Alphabet alphabet)
        : alphabet_(alphabet), offset_(alphabet.size(), Count(0)), total_(0)
    {
    }

    Step push(Letter c)
    {
        if (!alphabet_.contains(c)) {
            throw InvalidInput("letter " + std::to_string(c) + " outside alphabet of size " +
                               std::to_string(alphabet_.size()));
        }
        Count fresh = total_ + 1;
        fresh -= offset_[c];
        offset_[c] = total_ + 1;
        total_ += fresh;
        ++length_;
        return {fresh, total_};
    }

    const Count& total() const { return total_; }
    std::size_t length() const { return length_; }
    const Alphabet& alphabet() const { return alphabet_; }

private:
    Alphabet alphabet_;
    std::vector<Count> offset_;
    Count total_;
    std::size_t length_ = 0;
};

using NewCountProfile = std::vector<BigCount>;

/// nu(T_1), ..., nu(T_n) for the prefixes of T; empty for the empty string.
NewCountProfile new_subseq_counts(const LetterString& text);

/// Number of distinct nonempty subsequences of T (0 for the empty string).
BigCount count_distinct(const LetterString& text);

/// count_distinct(T) + 1: the count with the empty subsequence included.
BigCount count_distinct_with_empty(const LetterString& text);

} // namespace subseq
