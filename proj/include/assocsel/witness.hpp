#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "assocsel/functions.hpp"
#include "assocsel/universe.hpp"

namespace assocsel {

// score(x) = #{z ∈ Σ^{|x|} : f(x, z) = x}
std::uint64_t score(const MultiMap& f, const Word& x);
// Indexed by the bit value of the word.
std::vector<std::uint64_t> scores_at_length(const MultiMap& f, unsigned n);

enum class TopMethod { Scan, PrefixSearch };

struct TopResult {
    std::optional<Word> word;
    std::size_t queries = 0;  // oracle queries (prefix search) or words scanned
};

// The word of length n with score 2^n.
TopResult top_string(const MultiMap& f, unsigned n, TopMethod method);

enum class CoverSource { Greedy, Lexmax };

struct CoverWitness {
    unsigned n = 0;
    std::vector<Word> members;
    CoverSource source = CoverSource::Greedy;
};

// Every x ∈ Σ^n has some y ∈ members with set-f(x, y) ⊆ {y}.
bool covers(const MultiMap& f, unsigned n, const std::vector<Word>& members);

CoverWitness dominating_cover(const MultiMap& f, const TargetSet& b, unsigned n);

constexpr unsigned kLexmaxMaxLength = 5;

// Largest setcode (shortlex) of 1..n+1 words of length n that cover Σ^n.
std::optional<CoverWitness> lexmax_cover(const MultiMap& f, unsigned n);
// Same, and re-verifies that the cover meets B^{=n} when that is nonempty.
std::optional<CoverWitness> lexmax_cover(const MultiMap& f, const TargetSet& b, unsigned n);

struct PrintResult {
    std::vector<Word> words;
    std::size_t queries = 0;
};

PrintResult printable_subset(const MultiMap& f, const TargetSet& b, unsigned n, CoverSource mode);

// Lengths at which B is promised nonempty.
class HintSet {
public:
    static HintSet even();
    static HintSet odd();
    static HintSet all();
    static HintSet list(std::vector<unsigned> lengths);
    // even | odd | all | list:1,3,4
    static HintSet parse(const std::string& text);

    bool contains(unsigned n) const;
    const std::string& label() const { return label_; }

private:
    enum class Kind { Even, Odd, All, List };
    HintSet(Kind k, std::vector<unsigned> l, std::string label)
        : kind_(k), lengths_(std::move(l)), label_(std::move(label)) {}

    Kind kind_;
    std::vector<unsigned> lengths_;
    std::string label_;
};

std::vector<Word> hinted_subset(const MultiMap& f, const TargetSet& b, const HintSet& t, unsigned n);

} // namespace assocsel
