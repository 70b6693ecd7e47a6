#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "assocsel/functions.hpp"
#include "assocsel/universe.hpp"

namespace assocsel {

// f′(x, y) = f(min(x, y), max(x, y))
MultiMap minmax_commutativize(const MultiMap& f);
// f″(x, y) = max(f(x, y), f(y, x)); f must be single-valued and total.
MultiMap maxvals_commutativize(const MultiMap& f);
// set-f̂(x, y) = set-f(x, y) ∪ set-f(y, x)
MultiMap union_commutativize(const MultiMap& f);

struct Connector {
    Word word;
    bool clause_a = false;  // ω ∈ set-f(x, ω) and y ∈ set-f(ω, y)
    bool clause_b = false;  // x ∈ set-f(x, ω) and ω ∈ set-f(ω, y)
};

// First ω in shortlex order, up to and including the bound, that connects x
// and y. The default bound is min(x, y).
std::optional<Connector> find_connector(const MultiMap& f, const Word& x, const Word& y,
                                        std::optional<Word> bound = std::nullopt);
std::optional<Word> smallest_connector(const MultiMap& f, const Word& x, const Word& y,
                                       std::optional<Word> bound = std::nullopt);

// Connector-based single-valued commutative selectors. The input is first
// made commutative with union_commutativize.
MultiMap associativize_total(const MultiMap& f);
MultiMap associativize_partial(const MultiMap& f);
MultiMap associativize_full(const MultiMap& f);

// Same-length pairs are decided by score (ties: shortlex max), other pairs
// by f. Refuses when 4^maxLen exceeds the budget.
MultiMap score_selector(const MultiMap& f, const TargetSet& b,
                        std::uint64_t budget = std::uint64_t{1} << 28);

// {2, 16} ∩ [0, maxLen]
std::vector<unsigned> default_gap_lengths(unsigned max_len);
MultiMap gapset_selector(const TargetSet& b, std::vector<unsigned> lengths);

// Ascending: the last element is the maximum.
using OrderList = std::vector<Word>;

bool is_subsequence(const OrderList& sub, const OrderList& seq);

OrderList merge_orders(const OrderList& s, const OrderList& l, const MultiMap& g);

// x before y iff h(x, y) = y, for all x ≠ y of length n.
OrderList length_order(const MultiMap& h, unsigned n);

struct EtimeResult {
    MultiMap selector;
    std::vector<OrderList> s_orders;  // S_0 .. S_N
    std::vector<OrderList> l_orders;  // L_0 .. L_N (L_0 = (ε))
};

EtimeResult etime_selector(const TargetSet& b, const MultiMap& base, unsigned n);

// Tabulate when the universe has at most `limit` words; otherwise return f.
MultiMap maybe_tabulated(const MultiMap& f, std::size_t limit = 511);

} // namespace assocsel
