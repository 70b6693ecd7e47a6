#include "assocsel/transforms.hpp"

#include <algorithm>
#include <unordered_map>

#include "assocsel/errors.hpp"

namespace assocsel {

namespace {

// Exhaustive precondition checks are run only on universes up to this size.
constexpr std::size_t kEagerCheckWords = 511;

std::vector<Word> all_words(const Universe& u) { return words_up_to(u.max_len()); }

void require_total(const MultiMap& f, const std::string& op) {
    if (f.universe().size() > kEagerCheckWords) return;
    auto d = all_words(f.universe());
    PropertyReport r = check_total(f, d);
    if (!r.pass) {
        throw PreconditionError(op + ": " + f.name() + " is not total, witness " +
                                r.witness->str());
    }
}

void require_single_valued(const MultiMap& f, const std::string& op) {
    if (f.single_valued() || f.universe().size() > kEagerCheckWords) return;
    auto d = all_words(f.universe());
    PropertyReport r = check_basic(f, d).single_valued;
    if (!r.pass) {
        throw PreconditionError(op + ": " + f.name() + " is multivalued, witness " +
                                r.witness->str());
    }
}

// A single value that must exist; throws the operation's precondition error
// otherwise.
Word single_value(const MultiMap& f, const Word& x, const Word& y, const std::string& op) {
    ValueSet v = f.eval(x, y);
    if (v.empty() || (v.both() && x != y)) {
        throw PreconditionError(op + ": " + f.name() + "(" + x.str() + ", " + y.str() +
                                ") is not a single value");
    }
    return v.first ? x : y;
}

} // namespace

MultiMap maybe_tabulated(const MultiMap& f, std::size_t limit) {
    if (f.is_table() || f.universe().size() > limit) return f;
    return f.tabulated();
}

MultiMap minmax_commutativize(const MultiMap& f) {
    return MultiMap::from_rule(
        f.universe(),
        [f](const Word& x, const Word& y) { return y < x ? f.eval(y, x).swapped() : f.eval(x, y); },
        f.single_valued(), "prime(" + f.name() + ")");
}

MultiMap maxvals_commutativize(const MultiMap& f) {
    const std::string op = "maxvals_commutativize";
    require_single_valued(f, op);
    require_total(f, op);
    return MultiMap::from_rule(
        f.universe(),
        [f, op](const Word& x, const Word& y) {
            Word a = single_value(f, x, y, op);
            Word b = single_value(f, y, x, op);
            const Word& m = shortlex_max(a, b);
            return m == x ? ValueSet::x() : ValueSet::y();
        },
        true, "dprime(" + f.name() + ")");
}

MultiMap union_commutativize(const MultiMap& f) {
    return MultiMap::from_rule(
        f.universe(),
        [f](const Word& x, const Word& y) {
            ValueSet a = f.eval(x, y);
            ValueSet b = f.eval(y, x).swapped();
            return ValueSet{a.first || b.first, a.second || b.second};
        },
        false, "hat(" + f.name() + ")");
}

std::optional<Connector> find_connector(const MultiMap& f, const Word& x, const Word& y,
                                        std::optional<Word> bound) {
    const Word limit = bound ? *bound : shortlex_min(x, y);
    const std::uint64_t last = std::min<std::uint64_t>(limit.rank(), f.universe().size() - 1);
    for (std::uint64_t r = 0; r <= last; ++r) {
        const Word w = Word::from_rank(r);
        bool a = f.yields(x, w, w) && f.yields(w, y, y);
        bool b = f.yields(x, w, x) && f.yields(w, y, w);
        if (a || b) return Connector{w, a, b};
    }
    return std::nullopt;
}

std::optional<Word> smallest_connector(const MultiMap& f, const Word& x, const Word& y,
                                       std::optional<Word> bound) {
    auto c = find_connector(f, x, y, bound);
    if (!c) return std::nullopt;
    return c->word;
}

namespace {

ValueSet connector_case(const Connector& c, const Word& x, const Word& y) {
    if (c.clause_a && !c.clause_b) return ValueSet::y();
    if (c.clause_b && !c.clause_a) return ValueSet::x();
    return x < y ? ValueSet::y() : ValueSet::x();
}

} // namespace

MultiMap associativize_total(const MultiMap& f) {
    require_total(f, "associativize_total");
    const MultiMap fc = maybe_tabulated(union_commutativize(f));
    return MultiMap::from_rule(
        f.universe(),
        [fc](const Word& x, const Word& y) {
            if (x == y) return ValueSet::x();
            auto c = find_connector(fc, x, y);
            if (!c) {
                throw PreconditionError("associativize_total: no connector for (" + x.str() +
                                        ", " + y.str() + "); the input is not total");
            }
            return connector_case(*c, x, y);
        },
        true, "assoc(" + f.name() + ")");
}

MultiMap associativize_partial(const MultiMap& f) {
    const MultiMap fc = maybe_tabulated(union_commutativize(f));
    return MultiMap::from_rule(
        f.universe(),
        [fc](const Word& x, const Word& y) {
            if (x == y) return ValueSet::x();
            auto c = find_connector(fc, x, y, shortlex_max(x, y));
            if (!c) return x < y ? ValueSet::y() : ValueSet::x();
            return connector_case(*c, x, y);
        },
        true, "assocp(" + f.name() + ")");
}

MultiMap associativize_full(const MultiMap& f) {
    MultiMap h = maybe_tabulated(associativize_partial(f));
    return associativize_total(h).renamed("assocf(" + f.name() + ")");
}

MultiMap score_selector(const MultiMap& f, const TargetSet& b, std::uint64_t budget) {
    const std::string op = "score_selector";
    const unsigned n = f.universe().max_len();
    if (b.universe() != f.universe()) {
        throw PreconditionError(op + ": selector and set use different universes");
    }
    if (2 * n >= 64 || (std::uint64_t{1} << (2 * n)) > budget) {
        throw RangeError(op + ": 4^" + std::to_string(n) + " evaluations exceed the budget");
    }
    if (f.universe().size() <= kEagerCheckWords) {
        auto d = all_words(f.universe());
        BasicReports basic = check_basic(f, d);
        for (const auto* r : {&basic.total, &basic.commutative, &basic.single_valued}) {
            if (!r->pass) {
                throw PreconditionError(op + ": " + f.name() + " is not " + r->property +
                                        ", witness " + r->witness->str());
            }
        }
        PropertyReport sel = is_selector_for(f, b, d);
        if (!sel.pass) {
            throw PreconditionError(op + ": " + f.name() + " is not a selector for B, witness " +
                                    sel.witness->str());
        }
    }
    // scores[len][bits]
    auto scores = std::make_shared<std::vector<std::vector<std::uint32_t>>>();
    for (unsigned len = 0; len <= n; ++len) {
        const std::uint64_t count = std::uint64_t{1} << len;
        std::vector<std::uint32_t> row(count, 0);
        for (std::uint64_t i = 0; i < count; ++i) {
            const Word x(i, len);
            for (std::uint64_t j = 0; j < count; ++j) {
                const Word z(j, len);
                if (single_value(f, x, z, op) == x) ++row[i];
            }
        }
        scores->push_back(std::move(row));
    }
    return MultiMap::from_rule(
        f.universe(),
        [f, scores](const Word& x, const Word& y) {
            if (x.length() != y.length()) return f.eval(x, y);
            const auto& row = (*scores)[x.length()];
            std::uint32_t sx = row[x.bits()];
            std::uint32_t sy = row[y.bits()];
            if (sx > sy) return ValueSet::x();
            if (sx < sy) return ValueSet::y();
            return x < y ? ValueSet::y() : ValueSet::x();
        },
        true, "score(" + f.name() + ")");
}

std::vector<unsigned> default_gap_lengths(unsigned max_len) {
    std::vector<unsigned> out;
    for (unsigned l : {2U, 16U}) {
        if (l <= max_len) out.push_back(l);
    }
    return out;
}

MultiMap gapset_selector(const TargetSet& b, std::vector<unsigned> lengths) {
    const Universe& u = b.universe();
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    if (lengths.empty()) {
        throw PreconditionError("gapset_selector: the set of gap lengths is empty");
    }
    if (lengths.back() > u.max_len()) {
        throw RangeError("gapset_selector: gap length " + std::to_string(lengths.back()) +
                         " exceeds max length " + std::to_string(u.max_len()));
    }
    std::vector<bool> in_l(u.max_len() + 1, false);
    for (unsigned l : lengths) in_l[l] = true;
    for (const Word& w : b.members()) {
        if (!in_l[w.length()]) {
            throw PreconditionError("gapset_selector: member " + w.str() +
                                    " has a length outside the gap lengths");
        }
    }
    for (unsigned len = 0; len <= u.max_len(); ++len) {
        std::optional<Word> seen;
        for (const Word& w : words_of_length(len)) {
            if (b.contains(w)) {
                seen = w;
            } else if (seen) {
                throw PreconditionError("gapset_selector: B is not monotone within length " +
                                        std::to_string(len) + ": " + seen->str() + " ∈ B but " +
                                        w.str() + " ∉ B");
            }
        }
    }
    std::string label = "gapset(";
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        label += (i ? "," : "") + std::to_string(lengths[i]);
    }
    label += ")";
    return MultiMap::from_rule(
        u,
        [b, in_l](const Word& x, const Word& y) {
            const bool lx = in_l[x.length()];
            const bool ly = in_l[y.length()];
            if (lx && !ly) return ValueSet::x();
            if (!lx && ly) return ValueSet::y();
            if (lx && ly && x.length() < y.length()) {
                return b.contains(x) ? ValueSet::x() : ValueSet::y();
            }
            if (lx && ly && x.length() > y.length()) {
                return b.contains(y) ? ValueSet::y() : ValueSet::x();
            }
            return x < y ? ValueSet::y() : ValueSet::x();
        },
        true, label);
}

bool is_subsequence(const OrderList& sub, const OrderList& seq) {
    std::size_t i = 0;
    for (const Word& w : seq) {
        if (i < sub.size() && sub[i] == w) ++i;
    }
    return i == sub.size();
}

namespace {

bool lists_exactly(const OrderList& list, const std::vector<Word>& expected) {
    OrderList sorted = list;
    std::sort(sorted.begin(), sorted.end());
    return sorted == expected;
}

} // namespace

OrderList merge_orders(const OrderList& s, const OrderList& l, const MultiMap& g) {
    const std::string op = "merge_orders";
    if (l.empty()) {
        throw PreconditionError(op + ": L is empty");
    }
    const unsigned next = l.front().length();
    if (next == 0) {
        throw PreconditionError(op + ": L must order a nonzero length");
    }
    if (!lists_exactly(s, words_up_to(next - 1))) {
        throw PreconditionError(op + ": S does not list exactly Σ^{≤" + std::to_string(next - 1) +
                                "}");
    }
    if (!lists_exactly(l, words_of_length(next))) {
        throw PreconditionError(op + ": L does not list exactly Σ^" + std::to_string(next));
    }
    OrderList out;
    out.reserve(s.size() + l.size());
    std::size_t ell = 0;  // 0-based ℓ
    for (const Word& x : s) {
        std::optional<std::size_t> r;
        for (std::size_t j = l.size(); j-- > ell;) {
            if (single_value(g, x, l[j], op) == x) {
                r = j;
                break;
            }
        }
        if (r) {
            for (std::size_t j = ell; j <= *r; ++j) out.push_back(l[j]);
            out.push_back(x);
            ell = *r + 1;
        } else {
            out.push_back(x);
        }
    }
    // The printed loop leaves y_ℓ .. y_last unplaced; they go on top.
    for (std::size_t j = ell; j < l.size(); ++j) out.push_back(l[j]);
    return out;
}

OrderList length_order(const MultiMap& h, unsigned n) {
    const std::string op = "length_order";
    OrderList out = words_of_length(n);
    std::stable_sort(out.begin(), out.end(), [&](const Word& x, const Word& y) {
        return x != y && single_value(h, x, y, op) == y;
    });
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            if (single_value(h, out[i], out[j], op) != out[j]) {
                throw InvariantError(op + ": " + h.name() + " does not induce a total order on Σ^" +
                                     std::to_string(n));
            }
        }
    }
    return out;
}

EtimeResult etime_selector(const TargetSet& b, const MultiMap& base, unsigned n) {
    if (n > b.universe().max_len()) {
        throw RangeError("etime_selector: upto " + std::to_string(n) + " exceeds max length " +
                         std::to_string(b.universe().max_len()));
    }
    MultiMap h = score_selector(base, b);
    std::vector<OrderList> s_orders{{Word{}}};
    std::vector<OrderList> l_orders{{Word{}}};
    for (unsigned len = 1; len <= n; ++len) {
        l_orders.push_back(length_order(h, len));
        s_orders.push_back(merge_orders(s_orders.back(), l_orders.back(), base));
    }
    // pos[len][rank] = position of the word in S_len
    auto pos = std::make_shared<std::vector<std::vector<std::uint32_t>>>();
    for (const OrderList& s : s_orders) {
        std::vector<std::uint32_t> p(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) p[s[i].rank()] = static_cast<std::uint32_t>(i);
        pos->push_back(std::move(p));
    }
    MultiMap f = MultiMap::from_rule(
        Universe(n),
        [pos](const Word& x, const Word& y) {
            const auto& p = (*pos)[std::max(x.length(), y.length())];
            return p[x.rank()] >= p[y.rank()] ? ValueSet::x() : ValueSet::y();
        },
        true, "etime(" + base.name() + ")");
    return EtimeResult{std::move(f), std::move(s_orders), std::move(l_orders)};
}

} // namespace assocsel
