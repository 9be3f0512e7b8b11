#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "subseq/counting.hpp"
#include "subseq/errors.hpp"
#include "support.hpp"

using namespace subseq;
using testing::all_strings;
using testing::bin;
using testing::brute_profile;

namespace {

std::vector<unsigned long> as_ul(const NewCountProfile& p)
{
    std::vector<unsigned long> out;
    for (const auto& v : p) {
        out.push_back(v.get_ui());
    }
    return out;
}

using UL = std::vector<unsigned long>;

} // namespace

TEST_CASE("new_subseq_counts examples")
{
    CHECK(as_ul(new_subseq_counts(bin("000"))) == UL{1, 1, 1});
    CHECK(as_ul(new_subseq_counts(bin("010"))) == UL{1, 2, 3});
    CHECK(as_ul(new_subseq_counts(bin("0110"))) == UL{1, 2, 2, 5});
    // "321" over {1,2,3} is 2,1,0 here
    CHECK(as_ul(new_subseq_counts(parse_letter_string("210", 3))) == UL{1, 2, 4});
    CHECK(new_subseq_counts(bin("")).empty());

    // the derived values come straight from set enumeration
    CHECK(brute_profile(bin("010")) == std::vector<std::size_t>{1, 2, 3});
    CHECK(brute_profile(bin("0110")) == std::vector<std::size_t>{1, 2, 2, 5});
}

TEST_CASE("count_distinct examples")
{
    CHECK(count_distinct(bin("010")) == 6);
    CHECK(count_distinct(bin("111")) == 3);
    CHECK(count_distinct(bin("0110")) == 10);
    CHECK(count_distinct(bin("")) == 0);
    CHECK(oracle::enumerate_distinct(bin("0110")).size() == 10);

    CHECK(count_distinct_with_empty(bin("")) == 1);
    CHECK(count_distinct_with_empty(bin("01")) == 4);
    CHECK(count_distinct_with_empty(bin("111")) == 4);
}

TEST_CASE("incremental counter")
{
    SUBCASE("binary 010")
    {
        IncrementalCounter<> c(binary_alphabet);
        UL fresh;
        UL total;
        for (Letter x : {0u, 1u, 0u}) {
            const auto s = c.push(x);
            fresh.push_back(s.fresh.get_ui());
            total.push_back(s.total.get_ui());
        }
        CHECK(fresh == UL{1, 2, 3});
        CHECK(total == UL{1, 3, 6});
        CHECK(c.length() == 3);
    }
    SUBCASE("constant")
    {
        IncrementalCounter<std::uint64_t> c(binary_alphabet);
        CHECK(c.push(1).fresh == 1);
        CHECK(c.push(1).fresh == 1);
        CHECK(c.push(1).fresh == 1);
    }
    SUBCASE("ternary")
    {
        IncrementalCounter<std::uint64_t> c(Alphabet(3));
        CHECK(c.push(2).fresh == 1);
        CHECK(c.push(1).fresh == 2);
        CHECK(c.push(0).fresh == 4);
    }
    SUBCASE("out of range letter")
    {
        IncrementalCounter<> c(Alphabet(3));
        CHECK_THROWS_AS(c.push(3), InvalidInput);
    }
}

TEST_CASE("letter strings validate and parse")
{
    CHECK_THROWS_AS(Alphabet(0), InvalidInput);
    CHECK_THROWS_AS(parse_letter_string("012", 2), InvalidInput);
    CHECK_THROWS_AS(parse_letter_string("01x"), InvalidInput);
    CHECK_THROWS_AS(parse_letter_string("1,,2"), InvalidInput);
    const auto wide = parse_letter_string("11, 0,3");
    CHECK(wide.alphabet().size() == 12);
    CHECK(wide.size() == 3);
    CHECK(wide.to_string() == "11,0,3");
    CHECK(parse_letter_string("111").alphabet().size() == 2);
}

TEST_CASE("count_distinct matches set enumeration exhaustively")
{
    for (std::size_t len = 0; len <= 10; ++len) {
        for (const auto& t : all_strings(2, len)) {
            REQUIRE(count_distinct(t) == oracle::enumerate_distinct(t).size());
        }
    }
    for (std::size_t len = 0; len <= 6; ++len) {
        for (const auto& t : all_strings(3, len)) {
            REQUIRE(count_distinct(t) == oracle::enumerate_distinct(t).size());
        }
    }
}

TEST_CASE("profile invariants: positive entries, strict growth, upper bound")
{
    for (std::size_t len = 1; len <= 12; ++len) {
        for (const auto& t : all_strings(2, len)) {
            const auto p = new_subseq_counts(t);
            BigCount running = 0;
            for (const auto& v : p) {
                REQUIRE(v >= 1);
                running += v;
            }
            BigCount bound = 1;
            bound <<= static_cast<mp_bitcnt_t>(len);
            REQUIRE(running <= bound - 1);
        }
    }
}

TEST_CASE("relabeling the alphabet leaves the profile unchanged")
{
    std::vector<Letter> perm = {0, 1, 2};
    const auto strings = all_strings(3, 6);
    do {
        for (const auto& t : strings) {
            std::vector<Letter> relabeled;
            for (Letter c : t.letters()) {
                relabeled.push_back(perm[c]);
            }
            REQUIRE(new_subseq_counts(t) == new_subseq_counts(LetterString(t.alphabet(), relabeled)));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("constant strings have exactly n distinct subsequences")
{
    for (std::size_t n = 0; n <= 64; ++n) {
        CHECK(count_distinct(LetterString(Alphabet(4), std::vector<Letter>(n, 3))) == n);
    }
}

TEST_CASE("first occurrence of a binary letter adds n (special case of the general recursion)")
{
    for (std::size_t len = 1; len <= 10; ++len) {
        for (const auto& t : all_strings(2, len)) {
            const auto p = new_subseq_counts(t);
            const Letter last = t[len - 1];
            const bool first = std::none_of(t.letters().begin(), t.letters().end() - 1,
                                            [&](Letter c) { return c == last; });
            if (first) {
                REQUIRE(p.back() == len);
            }
        }
    }
}

TEST_CASE("grandchild identities over all binary strings of length <= 10")
{
    auto nu_after = [](const LetterString& base, std::initializer_list<Letter> tail) {
        LetterString t = base;
        for (Letter c : tail) {
            t.push_back(c);
        }
        return new_subseq_counts(t).back();
    };
    for (std::size_t len = 0; len <= 10; ++len) {
        for (const auto& t : all_strings(2, len)) {
            for (Letter j = 0; j < 2; ++j) {
                const Letter k = 1 - j;
                REQUIRE(nu_after(t, {j, k}) == nu_after(t, {j}) + nu_after(t, {k}));
                REQUIRE(nu_after(t, {j, j}) == nu_after(t, {j}));
            }
        }
    }
}

TEST_CASE("big counts do not overflow")
{
    // alternating 0101... of length 200: phi grows like the Fibonacci numbers
    std::vector<Letter> letters;
    for (int i = 0; i < 200; ++i) {
        letters.push_back(static_cast<Letter>(i % 2));
    }
    const auto phi = count_distinct(LetterString(binary_alphabet, letters));
    // phi(alternating length n) = F(n+3) - 2
    mpz_class fib;
    mpz_fib_ui(fib.get_mpz_t(), 203);
    CHECK(phi == fib - 2);
    CHECK(phi > mpz_class("1000000000000000000000000000000000000000"));
}
