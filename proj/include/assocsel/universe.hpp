#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace assocsel {

// A binary string. Bits are stored right-aligned in `bits_`; the first
// character of the string is the most significant of the `length_` bits.
//
// Member order matters: the defaulted comparison compares length first and
// then the bit value, which is exactly shortlex order.
class Word {
public:
    static constexpr unsigned kMaxLength = 62;

    constexpr Word() = default;
    Word(std::uint64_t bits, unsigned length);

    // "0101", or "-" for the empty word.
    static Word parse(std::string_view text);
    // Inverse of rank().
    static Word from_rank(std::uint64_t rank);
    static Word zeros(unsigned n);
    static Word ones(unsigned n);

    unsigned length() const { return length_; }
    std::uint64_t bits() const { return bits_; }
    bool empty() const { return length_ == 0; }

    // i-th character from the left, 0-based.
    bool bit(unsigned i) const;
    // Position in the shortlex enumeration of all binary strings.
    std::uint64_t rank() const { return (std::uint64_t{1} << length_) - 1 + bits_; }

    Word append(bool b) const;
    Word concat(const Word& rhs) const;
    Word prefix(unsigned n) const;
    Word suffix_from(unsigned start) const;

    std::string str() const;

    friend constexpr auto operator<=>(const Word&, const Word&) = default;
    friend constexpr bool operator==(const Word&, const Word&) = default;

private:
    std::uint32_t length_ = 0;
    std::uint64_t bits_ = 0;
};

std::strong_ordering shortlex_compare(const Word& x, const Word& y);
inline const Word& shortlex_min(const Word& x, const Word& y) { return y < x ? y : x; }
inline const Word& shortlex_max(const Word& x, const Word& y) { return x < y ? y : x; }

// Σ^{≤maxLen} under shortlex order. Word ranks double as dense indices.
class Universe {
public:
    static constexpr unsigned kMaxMaterialized = 20;

    explicit Universe(unsigned max_len);

    unsigned max_len() const { return max_len_; }
    // 2^{N+1} - 1
    std::size_t size() const { return size_; }

    bool contains(const Word& w) const { return w.length() <= max_len_; }
    std::size_t index(const Word& w) const;  // throws RangeError outside
    Word word(std::size_t index) const;

    friend bool operator==(const Universe&, const Universe&) = default;

private:
    unsigned max_len_;
    std::size_t size_;
};

enum class Extent { Exact, UpTo };

// Ascending shortlex list of Σ^n (Exact) or Σ^{≤n} (UpTo).
std::vector<Word> enumerate(const Universe& u, Extent mode, unsigned n);
std::vector<Word> words_of_length(unsigned n);
std::vector<Word> words_up_to(unsigned n);

struct PairCode {
    Word encoded;
};

// Layout 1^{|x|} 0 x w.
PairCode encode_pair(const Word& x, const Word& w);
std::pair<Word, Word> decode_pair(const PairCode& code);

// Concatenation of the members in descending shortlex order. Empty input is a
// PreconditionError; members of different lengths an InvariantError.
Word setcode(std::span<const Word> members);
// Ascending list of the decoded members.
std::vector<Word> setcode_inv(const Word& code, unsigned n);

struct PrefixSearchResult {
    std::optional<Word> word;
    std::size_t queries = 0;
};

// Extends the empty prefix bit by bit, trying 1 before 0, keeping only
// prefixes for which `exists` holds. Returns the lexicographically largest
// length-n word whose every prefix satisfies the predicate.
PrefixSearchResult prefix_search(unsigned n, const std::function<bool(const Word&)>& exists);

} // namespace assocsel

template <>
struct std::hash<assocsel::Word> {
    std::size_t operator()(const assocsel::Word& w) const noexcept {
        return std::hash<std::uint64_t>{}(w.rank());
    }
};
