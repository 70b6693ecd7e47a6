#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "assocsel/errors.hpp"
#include "assocsel/universe.hpp"

using namespace assocsel;

namespace {

Word w(const char* s) { return Word::parse(s); }

// String-level shortlex, independent of Word's packed comparison.
int slow_compare(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return a.compare(b) < 0 ? -1 : a == b ? 0 : 1;
}

std::string text(const Word& x) { return x.empty() ? "" : x.str(); }

} // namespace

TEST_SUITE("universe") {

TEST_CASE("word parsing and printing") {
    CHECK(w("-").empty());
    CHECK(w("-").str() == "-");
    CHECK(w("0101").str() == "0101");
    CHECK(w("0101").length() == 4);
    CHECK(w("100").bit(0));
    CHECK_FALSE(w("100").bit(1));
    CHECK_THROWS_AS(w("012"), FormatError);
    CHECK_THROWS_AS(w(""), FormatError);
    CHECK_THROWS_AS(Word(4, 2), RangeError);
}

TEST_CASE("shortlex examples") {
    CHECK(shortlex_compare(w("-"), w("0")) == std::strong_ordering::less);
    CHECK(shortlex_compare(w("10"), w("01")) == std::strong_ordering::greater);
    CHECK(shortlex_compare(w("1"), w("00")) == std::strong_ordering::less);
    CHECK(shortlex_compare(w("11"), w("11")) == std::strong_ordering::equal);
    CHECK(shortlex_min(w("1"), w("00")) == w("1"));
    CHECK(shortlex_max(w("1"), w("00")) == w("00"));
}

TEST_CASE("shortlex agrees with a string oracle and is a strict total order") {
    auto all = words_up_to(5);
    for (const Word& x : all) {
        for (const Word& y : all) {
            const int o = slow_compare(text(x), text(y));
            CHECK(((x < y) == (o < 0)));
            CHECK(((x == y) == (o == 0)));
        }
    }
    // transitivity over a subset keeps the triple loop cheap
    auto some = words_up_to(3);
    for (const Word& x : some)
        for (const Word& y : some)
            for (const Word& z : some)
                if (x < y && y < z) CHECK(x < z);
}

TEST_CASE("rank matches enumeration position") {
    auto all = words_up_to(6);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].rank() == i);
        CHECK(Word::from_rank(i) == all[i]);
    }
}

TEST_CASE("enumeration") {
    Universe u(3);
    CHECK(u.size() == 15);
    auto e1 = enumerate(u, Extent::Exact, 1);
    REQUIRE(e1.size() == 2);
    CHECK(e1[0] == w("0"));
    CHECK(e1[1] == w("1"));
    auto u1 = enumerate(u, Extent::UpTo, 1);
    CHECK(u1 == std::vector<Word>{w("-"), w("0"), w("1")});
    CHECK(enumerate(u, Extent::Exact, 2) == std::vector<Word>{w("00"), w("01"), w("10"), w("11")});
    CHECK_THROWS_AS(enumerate(u, Extent::Exact, 4), RangeError);
    for (unsigned n = 0; n <= 3; ++n) {
        CHECK(enumerate(u, Extent::Exact, n).size() == (1U << n));
        CHECK(enumerate(u, Extent::UpTo, n).size() == (2U << n) - 1);
        auto v = enumerate(u, Extent::UpTo, n);
        CHECK(std::is_sorted(v.begin(), v.end()));
    }
    CHECK_THROWS_AS(Universe(Universe::kMaxMaterialized + 1), RangeError);
}

TEST_CASE("pairing") {
    CHECK(encode_pair(w("0"), w("11")).encoded == w("10011"));
    CHECK(encode_pair(w("-"), w("-")).encoded == w("0"));
    auto [x, y] = decode_pair(PairCode{w("10011")});
    CHECK(x == w("0"));
    CHECK(y == w("11"));
    CHECK_THROWS_AS(decode_pair(PairCode{w("111")}), FormatError);
    CHECK_THROWS_AS(decode_pair(PairCode{w("1101")}), FormatError);
    CHECK_THROWS_AS(decode_pair(PairCode{w("-")}), FormatError);
}

TEST_CASE("pairing round-trips up to length 8") {
    auto xs = words_up_to(4);
    auto ws = words_up_to(4);
    for (const Word& x : xs) {
        for (const Word& v : ws) {
            PairCode c = encode_pair(x, v);
            CHECK(c.encoded.length() == 2 * x.length() + 1 + v.length());
            auto [a, b] = decode_pair(c);
            CHECK(a == x);
            CHECK(b == v);
        }
    }
}

TEST_CASE("set codes") {
    std::vector<Word> y{w("01"), w("11")};
    CHECK(setcode(y) == w("1101"));
    std::vector<Word> single{w("0")};
    CHECK(setcode(single) == w("0"));
    CHECK(setcode_inv(w("1101"), 2) == std::vector<Word>{w("01"), w("11")});
    std::vector<Word> mixed{w("0"), w("11")};
    CHECK_THROWS_AS(setcode(mixed), InvariantError);
    CHECK_THROWS_AS(setcode(std::vector<Word>{}), PreconditionError);
    CHECK_THROWS_AS(setcode_inv(w("110"), 2), FormatError);
    CHECK_THROWS_AS(setcode_inv(w("0111"), 2), FormatError);  // ascending blocks
    CHECK_THROWS_AS(setcode_inv(w("1111"), 2), FormatError);  // repeated block
}

TEST_CASE("set codes are injective and invertible for all subsets of length 3") {
    auto l3 = words_of_length(3);
    std::set<std::string> seen;
    for (unsigned mask = 1; mask < (1U << l3.size()); ++mask) {
        std::vector<Word> ys;
        for (std::size_t i = 0; i < l3.size(); ++i)
            if (mask & (1U << i)) ys.push_back(l3[i]);
        Word c = setcode(ys);
        CHECK(c.length() == 3 * ys.size());
        CHECK(setcode_inv(c, 3) == ys);
        CHECK(seen.insert(c.str()).second);
    }
}

TEST_CASE("prefix search examples") {
    auto only = [](const Word& target) {
        return [target](const Word& p) { return target.prefix(p.length()) == p; };
    };
    auto r = prefix_search(2, only(w("01")));
    REQUIRE(r.word);
    CHECK(*r.word == w("01"));
    CHECK(r.queries <= 5);

    auto second_one = [](const Word& p) { return p.length() < 2 || p.bit(1); };
    CHECK(*prefix_search(2, second_one).word == w("11"));

    CHECK_FALSE(prefix_search(3, [](const Word&) { return false; }).word);
}

TEST_CASE("prefix search finds the maximum of any explicit set") {
    auto l3 = words_of_length(3);
    for (unsigned mask = 0; mask < 256; ++mask) {
        std::vector<Word> s;
        for (std::size_t i = 0; i < 8; ++i)
            if (mask & (1U << i)) s.push_back(l3[i]);
        auto exists = [&](const Word& p) {
            return std::any_of(s.begin(), s.end(),
                               [&](const Word& x) { return x.prefix(p.length()) == p; });
        };
        auto r = prefix_search(3, exists);
        CHECK(r.queries <= 7);
        if (s.empty()) {
            CHECK_FALSE(r.word);
        } else {
            REQUIRE(r.word);
            CHECK(*r.word == *std::max_element(s.begin(), s.end()));
        }
    }
}

}
