#include "assocsel/functions.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "assocsel/errors.hpp"

namespace assocsel {

std::string to_string(const ValueSet& v) {
    if (v.both()) return "xy";
    if (v.first) return "x";
    if (v.second) return "y";
    return "none";
}

WordSet::WordSet(std::initializer_list<Word> ws) : WordSet(std::vector<Word>(ws)) {}

WordSet::WordSet(std::vector<Word> ws) : items_(std::move(ws)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

void WordSet::insert(const Word& w) {
    auto it = std::lower_bound(items_.begin(), items_.end(), w);
    if (it == items_.end() || *it != w) {
        items_.insert(it, w);
    }
}

void WordSet::insert_all(const WordSet& other) {
    for (const Word& w : other) insert(w);
}

bool WordSet::contains(const Word& w) const {
    return std::binary_search(items_.begin(), items_.end(), w);
}

std::string WordSet::str() const {
    if (items_.empty()) return "∅";
    std::string out = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ",";
        out += items_[i].str();
    }
    return out + "}";
}

WordSet set_union(const WordSet& a, const WordSet& b) {
    WordSet out = a;
    out.insert_all(b);
    return out;
}

WordSet set_intersection(const WordSet& a, const WordSet& b) {
    std::vector<Word> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return WordSet(std::move(out));
}

bool is_subset(const WordSet& a, const WordSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---- TargetSet ----

TargetSet::TargetSet(const Universe& u) : universe_(u), bits_(u.size(), false) {}

TargetSet::TargetSet(const Universe& u, std::span<const Word> members) : TargetSet(u) {
    for (const Word& w : members) insert(w);
}

bool TargetSet::contains(const Word& w) const { return bits_[universe_.index(w)]; }

void TargetSet::insert(const Word& w) {
    auto idx = universe_.index(w);
    if (!bits_[idx]) {
        bits_[idx] = true;
        ++count_;
    }
}

std::vector<Word> TargetSet::members() const { return members_up_to(universe_.max_len()); }

std::vector<Word> TargetSet::members_of_length(unsigned n) const {
    std::vector<Word> out;
    if (n > universe_.max_len()) return out;
    for (const Word& w : words_of_length(n)) {
        if (bits_[w.rank()]) out.push_back(w);
    }
    return out;
}

std::vector<Word> TargetSet::members_up_to(unsigned n) const {
    std::vector<Word> out;
    n = std::min(n, universe_.max_len());
    for (std::size_t i = 0; i + 1 < (std::size_t{1} << (n + 1)); ++i) {
        if (bits_[i]) out.push_back(Word::from_rank(i));
    }
    return out;
}

std::vector<Word> TargetSet::nonmembers_of_length(unsigned n) const {
    std::vector<Word> out;
    for (const Word& w : words_of_length(n)) {
        if (!bits_[universe_.index(w)]) out.push_back(w);
    }
    return out;
}

// ---- MultiMap ----

MultiMap MultiMap::from_table(const Universe& u, std::vector<std::uint8_t> cells,
                              bool single_valued, std::string name) {
    if (u.size() > kMaxTableWords) {
        throw RangeError("table backend refused for a universe of " + std::to_string(u.size()) +
                         " words");
    }
    if (cells.size() != u.size() * u.size()) {
        throw InvariantError("table has the wrong number of cells");
    }
    MultiMap m(u, single_valued, std::move(name));
    m.table_ = std::make_shared<std::vector<std::uint8_t>>(std::move(cells));
    return m;
}

MultiMap MultiMap::empty_table(const Universe& u, bool single_valued, std::string name) {
    if (u.size() > kMaxTableWords) {
        throw RangeError("table backend refused for a universe of " + std::to_string(u.size()) +
                         " words");
    }
    std::vector<std::uint8_t> cells(u.size() * u.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        cells[i * u.size() + i] = ValueSet::x().code();
    }
    return from_table(u, std::move(cells), single_valued, std::move(name));
}

MultiMap MultiMap::from_rule(const Universe& u, Rule rule, bool single_valued, std::string name) {
    MultiMap m(u, single_valued, std::move(name));
    m.rule_ = std::move(rule);
    return m;
}

ValueSet MultiMap::raw(const Word& x, const Word& y) const {
    if (table_) {
        return ValueSet::from_code((*table_)[x.rank() * universe_.size() + y.rank()]);
    }
    return rule_(x, y);
}

ValueSet MultiMap::eval(const Word& x, const Word& y) const {
    if (!universe_.contains(x) || !universe_.contains(y)) {
        throw RangeError("evaluation of " + name_ + " at (" + x.str() + ", " + y.str() +
                         ") outside the universe of max length " +
                         std::to_string(universe_.max_len()));
    }
    ValueSet v = raw(x, y);
    if (x == y) {
        return v.empty() ? v : ValueSet::x();
    }
    if (single_valued_ && v.both()) {
        throw InvariantError(name_ + " is flagged single-valued but set-f(" + x.str() + ", " +
                             y.str() + ") has two values");
    }
    return v;
}

WordSet MultiMap::values(const Word& x, const Word& y) const {
    ValueSet v = eval(x, y);
    WordSet out;
    if (v.first) out.insert(x);
    if (v.second) out.insert(y);
    return out;
}

bool MultiMap::yields(const Word& x, const Word& y, const Word& w) const {
    ValueSet v = eval(x, y);
    return (v.first && w == x) || (v.second && w == y);
}

MultiMap MultiMap::tabulated() const {
    if (table_) return *this;
    const std::size_t n = universe_.size();
    if (n > kMaxTableWords) {
        throw RangeError("cannot tabulate " + name_ + " over " + std::to_string(n) + " words");
    }
    std::vector<std::uint8_t> cells(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        Word x = Word::from_rank(i);
        for (std::size_t j = 0; j < n; ++j) {
            cells[i * n + j] = eval(x, Word::from_rank(j)).code();
        }
    }
    return from_table(universe_, std::move(cells), single_valued_, name_);
}

MultiMap MultiMap::renamed(std::string name) const {
    MultiMap m = *this;
    m.name_ = std::move(name);
    return m;
}

void MultiMap::set(const Word& x, const Word& y, ValueSet v) {
    if (!table_) {
        throw InvariantError("set() on a rule-backed function");
    }
    if (single_valued_ && v.both() && x != y) {
        throw InvariantError("two values stored in a single-valued table");
    }
    // Copy on write: tables may be shared between copies.
    if (table_.use_count() > 1) {
        table_ = std::make_shared<std::vector<std::uint8_t>>(*table_);
    }
    (*table_)[universe_.index(x) * universe_.size() + universe_.index(y)] = v.code();
}

WordSet eval_ext(const MultiMap& f, const WordSet& a, const Word& y, Side side) {
    WordSet out;
    for (const Word& w : a) {
        out.insert_all(side == Side::Left ? f.values(w, y) : f.values(y, w));
    }
    return out;
}

// ---- reports ----

std::string Witness::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ", ";
        out += args[i].str();
    }
    out += ")";
    for (const auto& [label, set] : values) {
        out += " " + label + "=" + set.str();
    }
    return out;
}

std::string PropertyReport::str() const {
    std::string out = (pass ? "PASS " : "FAIL ") + property;
    if (witness) out += " witness " + witness->str();
    if (!note.empty()) out += " (" + note + ")";
    return out;
}

namespace {

// Triple evaluation with value sets packed as bitmasks over the positions of
// (a, b, c). Avoids allocation in the O(|D|^3) loops.
struct Triple {
    const Word* t[3];

    unsigned bit(const Word& w) const {
        if (w == *t[0]) return 1;
        if (w == *t[1]) return 2;
        return 4;
    }
    unsigned val(const MultiMap& f, const Word& x, const Word& y) const {
        ValueSet v = f.eval(x, y);
        unsigned m = 0;
        if (v.first) m |= bit(x);
        if (v.second) m |= bit(y);
        return m;
    }
    // set-f(p, set-f(q, r))
    unsigned right(const MultiMap& f, const Word& p, const Word& q, const Word& r) const {
        unsigned inner = val(f, q, r);
        unsigned out = 0;
        for (unsigned k = 0; k < 3; ++k) {
            if (inner & (1U << k)) out |= val(f, p, *t[k]);
        }
        return out;
    }
    // set-f(set-f(p, q), r)
    unsigned left(const MultiMap& f, const Word& p, const Word& q, const Word& r) const {
        unsigned inner = val(f, p, q);
        unsigned out = 0;
        for (unsigned k = 0; k < 3; ++k) {
            if (inner & (1U << k)) out |= val(f, *t[k], r);
        }
        return out;
    }
    WordSet set(unsigned m) const {
        WordSet out;
        for (unsigned k = 0; k < 3; ++k) {
            if (m & (1U << k)) out.insert(*t[k]);
        }
        return out;
    }
};

enum class AssocKind { Strong, Weak };

PropertyReport triple_scan(const MultiMap& f, std::span<const Word> d, AssocKind kind,
                           std::string property) {
    PropertyReport rep{std::move(property), true, std::nullopt, {}};
    for (const Word& a : d) {
        for (const Word& b : d) {
            for (const Word& c : d) {
                Triple t{{&a, &b, &c}};
                unsigned l = t.right(f, a, b, c);
                unsigned r = t.left(f, a, b, c);
                bool ok = l == r || (kind == AssocKind::Weak && (l == 0 || r == 0));
                if (!ok) {
                    rep.pass = false;
                    rep.witness = Witness{{a, b, c},
                                          {{"f(a,f(b,c))", t.set(l)}, {"f(f(a,b),c)", t.set(r)}}};
                    return rep;
                }
            }
        }
    }
    return rep;
}

} // namespace

PropertyReport check_total(const MultiMap& f, std::span<const Word> d) {
    PropertyReport rep{"total", true, std::nullopt, {}};
    for (const Word& x : d) {
        for (const Word& y : d) {
            if (f.eval(x, y).empty()) {
                rep.pass = false;
                rep.witness = Witness{{x, y}, {{"f(x,y)", WordSet{}}}};
                return rep;
            }
        }
    }
    return rep;
}

PropertyReport check_commutative(const MultiMap& f, std::span<const Word> d) {
    PropertyReport rep{"commutative", true, std::nullopt, {}};
    for (const Word& x : d) {
        for (const Word& y : d) {
            if (!(x < y)) continue;
            WordSet v1 = f.values(x, y);
            WordSet v2 = f.values(y, x);
            if (v1 != v2) {
                rep.pass = false;
                rep.witness = Witness{{x, y}, {{"f(x,y)", v1}, {"f(y,x)", v2}}};
                return rep;
            }
        }
    }
    return rep;
}

BasicReports check_basic(const MultiMap& f, std::span<const Word> d) {
    BasicReports out;
    out.total = check_total(f, d);
    out.commutative = check_commutative(f, d);
    out.single_valued = PropertyReport{"single-valued", true, std::nullopt, {}};
    for (const Word& x : d) {
        for (const Word& y : d) {
            if (x != y && f.eval(x, y).both()) {
                out.single_valued.pass = false;
                out.single_valued.witness = Witness{{x, y}, {{"f(x,y)", f.values(x, y)}}};
                return out;
            }
        }
    }
    return out;
}

PropertyReport is_associative_on(const MultiMap& f, std::span<const Word> d) {
    PropertyReport total = check_total(f, d);
    if (!total.pass) {
        const auto& w = total.witness->args;
        throw PreconditionError(f.name() + " is not total on the domain: set-f(" + w[0].str() +
                                ", " + w[1].str() + ") = ∅");
    }
    return triple_scan(f, d, AssocKind::Strong, "associative");
}

PropertyReport is_weakly_associative_on(const MultiMap& f, std::span<const Word> d) {
    return triple_scan(f, d, AssocKind::Weak, "weakly-associative");
}

PropertyReport is_strongly_associative_on(const MultiMap& f, std::span<const Word> d) {
    return triple_scan(f, d, AssocKind::Strong, "associative");
}

std::string to_string(LengthVerdict v) {
    switch (v) {
    case LengthVerdict::Associative: return "associative";
    case LengthVerdict::NotAssociative: return "not-associative";
    case LengthVerdict::NotTotal: return "not-total";
    }
    return "?";
}

LengthwiseReport is_associative_at_each_length(const MultiMap& f, unsigned n) {
    if (n > f.universe().max_len()) {
        throw RangeError("length " + std::to_string(n) + " exceeds the universe of " + f.name());
    }
    LengthwiseReport out;
    out.summary = PropertyReport{"associative-at-each-length", true, std::nullopt, {}};
    for (unsigned len = 0; len <= n; ++len) {
        auto d = words_of_length(len);
        PropertyReport total = check_total(f, d);
        if (!total.pass) {
            out.per_length.push_back(LengthVerdict::NotTotal);
            if (out.summary.pass) {
                out.summary.pass = false;
                out.summary.witness = total.witness;
                out.summary.note = "not total at length " + std::to_string(len);
            }
            continue;
        }
        PropertyReport rep = triple_scan(f, d, AssocKind::Strong, "associative");
        out.per_length.push_back(rep.pass ? LengthVerdict::Associative
                                          : LengthVerdict::NotAssociative);
        if (!rep.pass && out.summary.pass) {
            out.summary.pass = false;
            out.summary.witness = rep.witness;
            out.summary.note = "not associative at length " + std::to_string(len);
        }
    }
    return out;
}

PropertyReport is_selector_for(const MultiMap& f, const TargetSet& b, std::span<const Word> d) {
    PropertyReport rep{"selector", true, std::nullopt, {}};
    for (const Word& x : d) {
        for (const Word& y : d) {
            if (!b.contains(x) && !b.contains(y)) continue;
            ValueSet v = f.eval(x, y);
            bool ok = !v.empty() && (!v.first || b.contains(x)) && (!v.second || b.contains(y));
            if (!ok) {
                rep.pass = false;
                rep.witness = Witness{{x, y}, {{"f(x,y)", f.values(x, y)}}};
                return rep;
            }
        }
    }
    return rep;
}

TripleConditionsReport triple_conditions_check(const MultiMap& f, std::span<const Word> b) {
    PropertyReport total = check_total(f, b);
    if (!total.pass) {
        throw PreconditionError(f.name() + " is not total on the set: witness " +
                                total.witness->str());
    }
    PropertyReport comm = check_commutative(f, b);
    if (!comm.pass) {
        throw PreconditionError(f.name() + " is not commutative on the set: witness " +
                                comm.witness->str());
    }
    TripleConditionsReport out;
    out.cond_associative = triple_scan(f, b, AssocKind::Strong, "associative").pass;
    out.cond_all_triples = true;
    out.cond_distinct_triples = true;
    std::optional<Witness> separating;
    for (const Word& x : b) {
        for (const Word& y : b) {
            for (const Word& z : b) {
                Triple t{{&x, &y, &z}};
                unsigned v1 = t.right(f, x, y, z);
                unsigned v2 = t.right(f, y, x, z);
                unsigned v3 = t.right(f, z, x, y);
                if (v1 == v2 && v2 == v3) continue;
                Witness w{{x, y, z},
                          {{"f(a,f(b,c))", t.set(v1)},
                           {"f(b,f(a,c))", t.set(v2)},
                           {"f(c,f(a,b))", t.set(v3)}}};
                if (out.cond_all_triples) {
                    out.cond_all_triples = false;
                    separating = w;
                }
                if (x != y && y != z && x != z && out.cond_distinct_triples) {
                    out.cond_distinct_triples = false;
                    separating = w;
                }
            }
        }
    }
    bool agree = out.cond_associative == out.cond_all_triples &&
                 out.cond_all_triples == out.cond_distinct_triples;
    auto flag = [](bool v) { return v ? std::string("true") : std::string("false"); };
    out.report = PropertyReport{"triple-conditions", agree, std::nullopt,
                                "associative=" + flag(out.cond_associative) +
                                    " all-triples=" + flag(out.cond_all_triples) +
                                    " distinct-triples=" + flag(out.cond_distinct_triples)};
    if (!agree) out.report.witness = separating;
    return out;
}

namespace {

PropertyReport totality_on(const MultiMap& f, const TargetSet& b, const std::vector<Word>& d,
                           const std::vector<Word>& b_part, const std::string& property) {
    PropertyReport rep{property, true, std::nullopt, {}};
    if (b_part.empty()) {
        rep.note = "vacuous: no member of B in range";
        return rep;
    }
    PropertyReport sel = is_selector_for(f, b, d);
    if (!sel.pass) {
        throw PreconditionError(f.name() + " is not a selector for B: witness " +
                                sel.witness->str());
    }
    PropertyReport total = check_total(f, d);
    if (total.pass) {
        rep.note = "total";
        return rep;
    }
    const Word x = total.witness->args[0];
    const Word y = total.witness->args[1];
    const Word& z = b_part.front();
    WordSet lhs = eval_ext(f, f.values(y, z), x, Side::Right);
    WordSet rhs = eval_ext(f, f.values(x, y), z, Side::Left);
    rep.witness = Witness{{x, y, z}, {{"f(x,f(y,z))", lhs}, {"f(f(x,y),z)", rhs}}};
    if (lhs != rhs) {
        rep.note = "partial, and not associative";
    } else {
        // Should not happen for a selector; fall back to a full scan.
        bool assoc = is_strongly_associative_on(f, d).pass;
        rep.pass = !assoc;
        rep.note = assoc ? "partial yet associative" : "partial, and not associative";
    }
    return rep;
}

} // namespace

PropertyReport totality_consequence(const MultiMap& f, const TargetSet& b) {
    if (b.empty()) {
        throw PreconditionError("totality consequence needs a nonempty B");
    }
    auto d = words_up_to(f.universe().max_len());
    return totality_on(f, b, d, b.members(), "associative-implies-total");
}

PropertyReport totality_consequence_at_length(const MultiMap& f, const TargetSet& b,
                                              unsigned n) {
    auto d = words_of_length(n);
    return totality_on(f, b, d, b.members_of_length(n),
                       "associative-at-length-implies-total-at-length");
}

// ---- enumeration ----

FunctionClass::FunctionClass(std::vector<Word> d, ValueMode mode, bool commutative_only,
                             bool total_only)
    : domain_(std::move(d)), universe_(0), mode_(mode), commutative_(commutative_only),
      total_(total_only) {
    std::sort(domain_.begin(), domain_.end());
    domain_.erase(std::unique(domain_.begin(), domain_.end()), domain_.end());
    if (domain_.size() > kMaxDomain) {
        throw RangeError("function class enumeration limited to " + std::to_string(kMaxDomain) +
                         " words, got " + std::to_string(domain_.size()));
    }
    unsigned max_len = 0;
    for (const Word& w : domain_) max_len = std::max(max_len, w.length());
    universe_ = Universe(max_len);

    if (!total_) off_choices_.push_back(ValueSet::none());
    off_choices_.push_back(ValueSet::x());
    off_choices_.push_back(ValueSet::y());
    if (mode_ == ValueMode::Multi) off_choices_.push_back(ValueSet::xy());
    diag_choices_ = {ValueSet::x()};
    if (!total_) diag_choices_ = {ValueSet::none(), ValueSet::x()};

    for (const Word& x : domain_) {
        for (const Word& y : domain_) {
            if (x == y) {
                if (!total_) slots_.push_back({x, y, true});
            } else if (!commutative_ || x < y) {
                slots_.push_back({x, y, false});
            }
        }
    }
    for (const Slot& s : slots_) {
        std::uint64_t radix = s.diagonal ? diag_choices_.size() : off_choices_.size();
        if (size_ > (std::numeric_limits<std::uint64_t>::max() >> 2) / radix) {
            throw RangeError("function class too large to index");
        }
        size_ *= radix;
    }
}

MultiMap FunctionClass::at(std::uint64_t index) const {
    if (index >= size_) {
        throw RangeError("function class index out of range");
    }
    MultiMap m = MultiMap::empty_table(universe_, mode_ == ValueMode::Single,
                                       "class#" + std::to_string(index));
    for (const Slot& s : slots_) {
        const auto& choices = s.diagonal ? diag_choices_ : off_choices_;
        ValueSet v = choices[index % choices.size()];
        index /= choices.size();
        m.set(s.x, s.y, v);
        if (commutative_ && !s.diagonal) m.set(s.y, s.x, v.swapped());
    }
    return m;
}

FunctionClass enumerate_class(std::span<const Word> d, ValueMode mode, bool commutative_only,
                              bool total_only) {
    return FunctionClass(std::vector<Word>(d.begin(), d.end()), mode, commutative_only,
                         total_only);
}

// ---- builtins and fixed instances ----

MultiMap maxlex(const Universe& u) {
    return MultiMap::from_rule(
        u, [](const Word& x, const Word& y) { return x < y ? ValueSet::y() : ValueSet::x(); },
        true, "maxlex");
}

MultiMap minlex(const Universe& u) {
    return MultiMap::from_rule(
        u, [](const Word& x, const Word& y) { return y < x ? ValueSet::y() : ValueSet::x(); },
        true, "minlex");
}

MultiMap prefer(const TargetSet& b) {
    return MultiMap::from_rule(
        b.universe(),
        [b](const Word& x, const Word& y) {
            bool bx = b.contains(x);
            bool by = b.contains(y);
            if (bx != by) return bx ? ValueSet::x() : ValueSet::y();
            return x < y ? ValueSet::y() : ValueSet::x();
        },
        true, "prefer");
}

NamedWords minmax_counterexample_words() { return {Word{}, Word::parse("0"), Word::parse("1")}; }

NamedWords partial_counterexample_words() {
    return {Word::parse("10"), Word::parse("00"), Word::parse("01")};
}

namespace {

// Words outside {a, b, c} beat words inside; two outside words give the
// shortlex maximum.
std::optional<ValueSet> outsider_rule(const NamedWords& n, const Word& x, const Word& y) {
    auto inside = [&](const Word& w) { return w == n.a || w == n.b || w == n.c; };
    bool ix = inside(x);
    bool iy = inside(y);
    if (ix && iy) return std::nullopt;
    if (ix) return ValueSet::y();
    if (iy) return ValueSet::x();
    return x < y ? ValueSet::y() : ValueSet::x();
}

} // namespace

MultiMap minmax_counterexample(const Universe& u) {
    if (u.max_len() < 1) {
        throw RangeError("the three-word instance needs max length at least 1");
    }
    const NamedWords n = minmax_counterexample_words();
    return MultiMap::from_rule(
        u,
        [n](const Word& x, const Word& y) {
            if (auto v = outsider_rule(n, x, y)) return *v;
            if (x == y) return ValueSet::x();
            // set-f(a,b)={a} set-f(b,a)={b}; set-f(a,c)={a,c} set-f(c,a)={c};
            // set-f(b,c)={b,c} set-f(c,b)={c}
            if (x == n.a && y == n.b) return ValueSet::x();
            if (x == n.b && y == n.a) return ValueSet::x();
            if (x == n.a && y == n.c) return ValueSet::xy();
            if (x == n.c && y == n.a) return ValueSet::x();
            if (x == n.b && y == n.c) return ValueSet::xy();
            return ValueSet::x();  // (c, b)
        },
        false, "minmax-cx");
}

MultiMap partial_counterexample(const Universe& u) {
    if (u.max_len() < 2) {
        throw RangeError("the partial counterexample needs max length at least 2");
    }
    const NamedWords n = partial_counterexample_words();
    return MultiMap::from_rule(
        u,
        [n](const Word& x, const Word& y) {
            if (auto v = outsider_rule(n, x, y)) return *v;
            if (x == y) return x == n.c ? ValueSet::none() : ValueSet::x();
            if (x == n.c && y == n.a) return ValueSet::x();
            if (x == n.b && y == n.c) return ValueSet::y();
            return ValueSet::none();
        },
        true, "partial-cx");
}

} // namespace assocsel
