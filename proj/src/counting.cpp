#include "subseq/counting.hpp"

namespace subseq {

NewCountProfile new_subseq_counts(const LetterString& text)
{
    IncrementalCounter<BigCount> counter(text.alphabet());
    NewCountProfile profile;
    profile.reserve(text.size());
    for (Letter c : text.letters()) {
        profile.push_back(counter.push(c).fresh);
    }
    return profile;
}

BigCount count_distinct(const LetterString& text)
{
    IncrementalCounter<BigCount> counter(text.alphabet());
    for (Letter c : text.letters()) {
        counter.push(c);
    }
    return counter.total();
}

BigCount count_distinct_with_empty(const LetterString& text)
{
    return count_distinct(text) + 1;
}

} // namespace subseq
