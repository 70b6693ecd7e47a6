#include "assocsel/universe.hpp"

#include <algorithm>

#include "assocsel/errors.hpp"

namespace assocsel {

namespace {

std::uint64_t mask(unsigned n) {
    return n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
}

} // namespace

Word::Word(std::uint64_t bits, unsigned length) : length_(length), bits_(bits) {
    if (length > kMaxLength) {
        throw RangeError("word length " + std::to_string(length) + " exceeds " +
                         std::to_string(kMaxLength));
    }
    if ((bits & ~mask(length)) != 0) {
        throw RangeError("word bits do not fit the declared length");
    }
}

Word Word::parse(std::string_view text) {
    if (text == "-") {
        return Word{};
    }
    if (text.empty()) {
        throw FormatError("empty token; write the empty word as '-'");
    }
    if (text.size() > kMaxLength) {
        throw RangeError("word '" + std::string(text) + "' is too long");
    }
    std::uint64_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw FormatError("invalid character '" + std::string(1, c) + "' in word '" +
                              std::string(text) + "'");
        }
        bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return Word(bits, static_cast<unsigned>(text.size()));
}

Word Word::from_rank(std::uint64_t rank) {
    unsigned len = 0;
    while (len < kMaxLength && rank + 1 >= (std::uint64_t{1} << (len + 1))) {
        ++len;
    }
    return Word(rank + 1 - (std::uint64_t{1} << len), len);
}

Word Word::zeros(unsigned n) { return Word(0, n); }
Word Word::ones(unsigned n) { return Word(mask(n), n); }

bool Word::bit(unsigned i) const {
    return ((bits_ >> (length_ - 1 - i)) & 1U) != 0;
}

Word Word::append(bool b) const {
    return Word((bits_ << 1) | static_cast<std::uint64_t>(b), length_ + 1);
}

Word Word::concat(const Word& rhs) const {
    if (length_ + rhs.length_ > kMaxLength) {
        throw RangeError("concatenation exceeds the maximum word length");
    }
    return Word((bits_ << rhs.length_) | rhs.bits_, length_ + rhs.length_);
}

Word Word::prefix(unsigned n) const {
    if (n > length_) {
        throw RangeError("prefix longer than word");
    }
    return Word(bits_ >> (length_ - n), n);
}

Word Word::suffix_from(unsigned start) const {
    if (start > length_) {
        throw RangeError("suffix start beyond word");
    }
    return Word(bits_ & mask(length_ - start), length_ - start);
}

std::string Word::str() const {
    if (length_ == 0) {
        return "-";
    }
    std::string out(length_, '0');
    for (unsigned i = 0; i < length_; ++i) {
        if (bit(i)) {
            out[i] = '1';
        }
    }
    return out;
}

std::strong_ordering shortlex_compare(const Word& x, const Word& y) { return x <=> y; }

Universe::Universe(unsigned max_len) : max_len_(max_len) {
    if (max_len > kMaxMaterialized) {
        throw RangeError("universe max length " + std::to_string(max_len) + " exceeds " +
                         std::to_string(kMaxMaterialized));
    }
    size_ = (std::size_t{1} << (max_len + 1)) - 1;
}

std::size_t Universe::index(const Word& w) const {
    if (!contains(w)) {
        throw RangeError("word " + w.str() + " is outside the universe of max length " +
                         std::to_string(max_len_));
    }
    return static_cast<std::size_t>(w.rank());
}

Word Universe::word(std::size_t index) const {
    if (index >= size_) {
        throw RangeError("index outside the universe");
    }
    return Word::from_rank(index);
}

std::vector<Word> words_of_length(unsigned n) {
    if (n > Universe::kMaxMaterialized + 4) {
        throw RangeError("refusing to materialize Σ^" + std::to_string(n));
    }
    std::vector<Word> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        out.emplace_back(v, n);
    }
    return out;
}

std::vector<Word> words_up_to(unsigned n) {
    if (n > Universe::kMaxMaterialized + 4) {
        throw RangeError("refusing to materialize Σ^{≤" + std::to_string(n) + "}");
    }
    std::vector<Word> out;
    out.reserve((std::size_t{1} << (n + 1)) - 1);
    for (std::uint64_t r = 0; r + 1 < (std::uint64_t{1} << (n + 1)); ++r) {
        out.push_back(Word::from_rank(r));
    }
    return out;
}

std::vector<Word> enumerate(const Universe& u, Extent mode, unsigned n) {
    if (n > u.max_len()) {
        throw RangeError("length " + std::to_string(n) + " exceeds universe max length " +
                         std::to_string(u.max_len()));
    }
    return mode == Extent::Exact ? words_of_length(n) : words_up_to(n);
}

PairCode encode_pair(const Word& x, const Word& w) {
    return PairCode{Word::ones(x.length()).append(false).concat(x).concat(w)};
}

std::pair<Word, Word> decode_pair(const PairCode& code) {
    const Word& c = code.encoded;
    unsigned k = 0;
    while (k < c.length() && c.bit(k)) {
        ++k;
    }
    if (k == c.length()) {
        throw FormatError("pair code " + c.str() + " has no separator after its unary prefix");
    }
    const unsigned start = k + 1;
    if (c.length() - start < k) {
        throw FormatError("pair code " + c.str() + " is shorter than its announced first part");
    }
    Word rest = c.suffix_from(start);
    return {rest.prefix(k), rest.suffix_from(k)};
}

Word setcode(std::span<const Word> members) {
    if (members.empty()) {
        throw PreconditionError("setcode of an empty set");
    }
    std::vector<Word> sorted(members.begin(), members.end());
    const unsigned n = sorted.front().length();
    for (const Word& w : sorted) {
        if (w.length() != n) {
            throw InvariantError("setcode members must share one length");
        }
    }
    std::sort(sorted.begin(), sorted.end(), std::greater<>{});
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Word code;
    for (const Word& w : sorted) {
        code = code.concat(w);
    }
    return code;
}

std::vector<Word> setcode_inv(const Word& code, unsigned n) {
    std::vector<Word> out;
    if (n == 0) {
        if (!code.empty()) {
            throw FormatError("nonempty setcode for length 0");
        }
        out.push_back(Word{});
        return out;
    }
    if (code.empty() || code.length() % n != 0) {
        throw FormatError("setcode length " + std::to_string(code.length()) +
                          " is not a positive multiple of " + std::to_string(n));
    }
    for (unsigned pos = 0; pos < code.length(); pos += n) {
        Word block = code.suffix_from(pos).prefix(n);
        if (!out.empty() && !(block < out.back())) {
            throw FormatError("setcode blocks are not strictly descending");
        }
        out.push_back(block);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

PrefixSearchResult prefix_search(unsigned n, const std::function<bool(const Word&)>& exists) {
    PrefixSearchResult result;
    Word prefix;
    ++result.queries;
    if (!exists(prefix)) {
        return result;
    }
    for (unsigned i = 0; i < n; ++i) {
        ++result.queries;
        if (exists(prefix.append(true))) {
            prefix = prefix.append(true);
            continue;
        }
        ++result.queries;
        if (exists(prefix.append(false))) {
            prefix = prefix.append(false);
            continue;
        }
        // The predicate was not extension-consistent.
        return result;
    }
    result.word = prefix;
    return result;
}

} // namespace assocsel
