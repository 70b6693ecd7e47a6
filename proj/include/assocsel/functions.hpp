#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "assocsel/universe.hpp"

namespace assocsel {

// Value of set-f(x, y) relative to the argument pair: which of x and y it
// contains. Self-containedness is structural.
struct ValueSet {
    bool first = false;
    bool second = false;

    static constexpr ValueSet none() { return {false, false}; }
    static constexpr ValueSet x() { return {true, false}; }
    static constexpr ValueSet y() { return {false, true}; }
    static constexpr ValueSet xy() { return {true, true}; }

    bool empty() const { return !first && !second; }
    bool both() const { return first && second; }
    ValueSet swapped() const { return {second, first}; }
    // 2-bit code: bit 0 = first, bit 1 = second.
    std::uint8_t code() const { return static_cast<std::uint8_t>(first | (second << 1)); }
    static ValueSet from_code(std::uint8_t c) { return {(c & 1U) != 0, (c & 2U) != 0}; }

    friend bool operator==(const ValueSet&, const ValueSet&) = default;
};

// Text used by the TABLE format: x, y, xy, none.
std::string to_string(const ValueSet& v);

// Small sorted duplicate-free set of words.
class WordSet {
public:
    WordSet() = default;
    WordSet(std::initializer_list<Word> ws);
    explicit WordSet(std::vector<Word> ws);

    void insert(const Word& w);
    void insert_all(const WordSet& other);
    bool contains(const Word& w) const;
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }
    const std::vector<Word>& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    // "{0,10}" or "∅".
    std::string str() const;

    friend bool operator==(const WordSet&, const WordSet&) = default;

private:
    std::vector<Word> items_;
};

WordSet set_union(const WordSet& a, const WordSet& b);
WordSet set_intersection(const WordSet& a, const WordSet& b);
bool is_subset(const WordSet& a, const WordSet& b);

// A finite set B ⊆ Σ^{≤N}.
class TargetSet {
public:
    explicit TargetSet(const Universe& u);
    TargetSet(const Universe& u, std::span<const Word> members);

    const Universe& universe() const { return universe_; }
    bool contains(const Word& w) const;
    void insert(const Word& w);
    bool empty() const { return count_ == 0; }
    std::size_t size() const { return count_; }

    std::vector<Word> members() const;
    std::vector<Word> members_of_length(unsigned n) const;
    std::vector<Word> members_up_to(unsigned n) const;
    std::vector<Word> nonmembers_of_length(unsigned n) const;

    friend bool operator==(const TargetSet&, const TargetSet&) = default;

private:
    Universe universe_;
    std::vector<bool> bits_;
    std::size_t count_ = 0;
};

// A self-contained 2-ary function, possibly partial and multivalued.
class MultiMap {
public:
    using Rule = std::function<ValueSet(const Word&, const Word&)>;

    // Tables with more words than this are refused.
    static constexpr std::size_t kMaxTableWords = 1023;  // maxLen 9

    // cells: universe.size()^2 codes, row-major by (rank x, rank y).
    static MultiMap from_table(const Universe& u, std::vector<std::uint8_t> cells,
                               bool single_valued, std::string name);
    // Empty table (every off-diagonal value ∅, diagonal {x}).
    static MultiMap empty_table(const Universe& u, bool single_valued, std::string name);
    static MultiMap from_rule(const Universe& u, Rule rule, bool single_valued, std::string name);

    const Universe& universe() const { return universe_; }
    const std::string& name() const { return name_; }
    bool single_valued() const { return single_valued_; }
    bool is_table() const { return table_ != nullptr; }

    // Throws RangeError for words outside the universe. On the diagonal a
    // nonempty value is normalized to {x} (flag `first`).
    ValueSet eval(const Word& x, const Word& y) const;
    WordSet values(const Word& x, const Word& y) const;
    bool yields(const Word& x, const Word& y, const Word& w) const;

    // Same function, Table backend. Requires a universe of at most
    // kMaxTableWords words.
    MultiMap tabulated() const;
    MultiMap renamed(std::string name) const;

    // Table-only mutation used by builders and parsers.
    void set(const Word& x, const Word& y, ValueSet v);

private:
    MultiMap(const Universe& u, bool single_valued, std::string name)
        : universe_(u), single_valued_(single_valued), name_(std::move(name)) {}

    ValueSet raw(const Word& x, const Word& y) const;

    Universe universe_;
    bool single_valued_;
    std::string name_;
    std::shared_ptr<std::vector<std::uint8_t>> table_;
    Rule rule_;
};

enum class Side { Left, Right };

// Left: set-f(A, y) = ⋃_{a∈A} set-f(a, y). Right: set-f(y, A).
WordSet eval_ext(const MultiMap& f, const WordSet& a, const Word& y, Side side);

struct Witness {
    std::vector<Word> args;
    std::vector<std::pair<std::string, WordSet>> values;

    std::string str() const;
};

struct PropertyReport {
    std::string property;
    bool pass = true;
    std::optional<Witness> witness;
    std::string note;

    std::string str() const;
};

struct BasicReports {
    PropertyReport total;
    PropertyReport commutative;
    PropertyReport single_valued;
};

BasicReports check_basic(const MultiMap& f, std::span<const Word> d);
PropertyReport check_total(const MultiMap& f, std::span<const Word> d);
PropertyReport check_commutative(const MultiMap& f, std::span<const Word> d);

// Throws PreconditionError when f is not total on d.
PropertyReport is_associative_on(const MultiMap& f, std::span<const Word> d);
PropertyReport is_weakly_associative_on(const MultiMap& f, std::span<const Word> d);
// Strong associativity for partial f: equality of the two nested sets for
// every triple, no totality requirement.
PropertyReport is_strongly_associative_on(const MultiMap& f, std::span<const Word> d);

enum class LengthVerdict { Associative, NotAssociative, NotTotal };
std::string to_string(LengthVerdict v);

struct LengthwiseReport {
    PropertyReport summary;
    std::vector<LengthVerdict> per_length;  // index = length
};

LengthwiseReport is_associative_at_each_length(const MultiMap& f, unsigned n);

PropertyReport is_selector_for(const MultiMap& f, const TargetSet& b, std::span<const Word> d);

struct TripleConditionsReport {
    PropertyReport report;
    bool cond_associative = false;
    bool cond_all_triples = false;
    bool cond_distinct_triples = false;
};

// Throws PreconditionError unless f is commutative and total on b.
TripleConditionsReport triple_conditions_check(const MultiMap& f, std::span<const Word> b);

// "f associative implies f total", over Σ^{≤N} (per_length: at length n,
// where B^{=n} ≠ ∅, restricted to Σ^n). Exhibits the witness triple
// (x, y, z) for an undefined pair (x, y) and z ∈ B.
PropertyReport totality_consequence(const MultiMap& f, const TargetSet& b);
PropertyReport totality_consequence_at_length(const MultiMap& f, const TargetSet& b, unsigned n);

enum class ValueMode { Single, Multi };

// All Table functions on D with the given shape, in a fixed mixed-radix
// order. Cells outside D×D are ∅ (diagonals {x}).
class FunctionClass {
public:
    static constexpr std::size_t kMaxDomain = 6;

    FunctionClass(std::vector<Word> d, ValueMode mode, bool commutative_only, bool total_only);

    std::uint64_t size() const { return size_; }
    MultiMap at(std::uint64_t index) const;
    const std::vector<Word>& domain() const { return domain_; }
    const Universe& universe() const { return universe_; }

private:
    struct Slot {
        Word x;
        Word y;
        bool diagonal;
    };

    std::vector<Word> domain_;
    Universe universe_;
    ValueMode mode_;
    bool commutative_;
    bool total_;
    std::vector<Slot> slots_;
    std::vector<ValueSet> off_choices_;
    std::vector<ValueSet> diag_choices_;
    std::uint64_t size_ = 1;
};

FunctionClass enumerate_class(std::span<const Word> d, ValueMode mode, bool commutative_only,
                              bool total_only);

// Builtin selectors.
MultiMap maxlex(const Universe& u);
MultiMap minlex(const Universe& u);
// Members of B beat nonmembers; otherwise the shortlex maximum.
MultiMap prefer(const TargetSet& b);

// The three-word total associative multivalued function with a = ε, b = 0,
// c = 1 whose minmax commutativization is not associative.
MultiMap minmax_counterexample(const Universe& u);

// The partial function with b <lex c <lex a of one length (b = 00, c = 01,
// a = 10) whose f′ and f̂ break associativity: set-f(c,a) = set-f(b,c) = {c},
// all other off-diagonal values on {a,b,c} empty, and set-f(c,c) = ∅.
// Requires maxLen ≥ 2.
MultiMap partial_counterexample(const Universe& u);

struct NamedWords {
    Word a;
    Word b;
    Word c;
};
NamedWords minmax_counterexample_words();
NamedWords partial_counterexample_words();

} // namespace assocsel
