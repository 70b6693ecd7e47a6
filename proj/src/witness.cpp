#include "assocsel/witness.hpp"

#include <algorithm>
#include <sstream>

#include "assocsel/digraph.hpp"
#include "assocsel/errors.hpp"

namespace assocsel {

namespace {

bool wins(const MultiMap& f, const Word& x, const Word& z) {
    ValueSet v = f.eval(x, z);
    if (v.empty() || (v.both() && x != z)) {
        throw PreconditionError("score: " + f.name() + "(" + x.str() + ", " + z.str() +
                                ") is not a single value");
    }
    return v.first;
}

void require_length_selector(const MultiMap& f, unsigned n, const std::string& op) {
    auto d = words_of_length(n);
    BasicReports basic = check_basic(f, d);
    for (const auto* r : {&basic.total, &basic.single_valued, &basic.commutative}) {
        if (!r->pass) {
            throw PreconditionError(op + ": " + f.name() + " is not " + r->property +
                                    " at length " + std::to_string(n) + ", witness " +
                                    r->witness->str());
        }
    }
    PropertyReport assoc = is_associative_on(f, d);
    if (!assoc.pass) {
        throw PreconditionError(op + ": " + f.name() + " is not associative at length " +
                                std::to_string(n) + ", witness " + assoc.witness->str());
    }
}

} // namespace

std::uint64_t score(const MultiMap& f, const Word& x) {
    std::uint64_t s = 0;
    for (const Word& z : words_of_length(x.length())) s += wins(f, x, z);
    return s;
}

std::vector<std::uint64_t> scores_at_length(const MultiMap& f, unsigned n) {
    auto words = words_of_length(n);
    std::vector<std::uint64_t> out(words.size(), 0);
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (const Word& z : words) out[i] += wins(f, words[i], z);
    }
    return out;
}

TopResult top_string(const MultiMap& f, unsigned n, TopMethod method) {
    require_length_selector(f, n, "top_string");
    const std::uint64_t full = std::uint64_t{1} << n;
    TopResult out;
    if (method == TopMethod::Scan) {
        auto scores = scores_at_length(f, n);
        out.queries = scores.size();
        auto it = std::max_element(scores.begin(), scores.end());
        if (*it != full) {
            throw InvariantError("top_string: no word of length " + std::to_string(n) +
                                 " reaches score 2^n");
        }
        out.word = Word(static_cast<std::uint64_t>(it - scores.begin()), n);
        return out;
    }
    // The oracle: does some completion of the prefix reach score 2^n?
    auto oracle = [&](const Word& prefix) {
        const unsigned rest = n - prefix.length();
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << rest); ++w) {
            if (score(f, prefix.concat(Word(w, rest))) == full) return true;
        }
        return false;
    };
    PrefixSearchResult r = prefix_search(n, oracle);
    out.word = r.word;
    out.queries = r.queries;
    if (!out.word) {
        throw InvariantError("top_string: prefix search found no word of full score");
    }
    return out;
}

bool covers(const MultiMap& f, unsigned n, const std::vector<Word>& members) {
    for (const Word& x : words_of_length(n)) {
        // set-f(x, y) ⊆ {y}; on the diagonal that always holds.
        bool ok = std::any_of(members.begin(), members.end(),
                              [&](const Word& y) { return x == y || !f.eval(x, y).first; });
        if (!ok) return false;
    }
    return true;
}

CoverWitness dominating_cover(const MultiMap& f, const TargetSet& b, unsigned n) {
    auto members = b.members_of_length(n);
    if (members.empty()) {
        throw PreconditionError("dominating_cover: B has no members of length " +
                                std::to_string(n));
    }
    auto slice = words_of_length(n);
    PropertyReport sel = is_selector_for(f, b, slice);
    if (!sel.pass) {
        throw PreconditionError("dominating_cover: " + f.name() +
                                " is not a selector for B, witness " + sel.witness->str());
    }
    PropertyReport sv = check_basic(f, slice).single_valued;
    if (!sv.pass) {
        throw PreconditionError("dominating_cover: " + f.name() + " is multivalued, witness " +
                                sv.witness->str());
    }
    Digraph g = induce(f, members);
    CoverWitness out{n, dominating_set(g), CoverSource::Greedy};
    if (out.members.size() > n + 1 || !covers(f, n, out.members)) {
        throw InvariantError("dominating_cover: greedy cover fails on Σ^" + std::to_string(n));
    }
    return out;
}

std::optional<CoverWitness> lexmax_cover(const MultiMap& f, unsigned n) {
    if (n > kLexmaxMaxLength) {
        throw RangeError("lexmax_cover is limited to length " + std::to_string(kLexmaxMaxLength) +
                         "; use dominating_cover for length " + std::to_string(n));
    }
    const std::size_t m = std::size_t{1} << n;
    auto slice = words_of_length(n);
    // good[x] = bitmask of y with set-f(x, y) ⊆ {y}
    std::vector<std::uint64_t> good(m, 0);
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            if (x == y || !f.eval(slice[x], slice[y]).first) good[x] |= std::uint64_t{1} << y;
        }
    }
    const std::size_t max_j = std::min<std::size_t>(n + 1, m);
    for (std::size_t j = max_j; j >= 1; --j) {
        // Combinations idx[0] > idx[1] > ... in descending lexicographic
        // order, which is descending setcode order.
        std::vector<std::size_t> idx(j);
        for (std::size_t i = 0; i < j; ++i) idx[i] = m - 1 - i;
        while (true) {
            std::uint64_t chosen = 0;
            for (auto i : idx) chosen |= std::uint64_t{1} << i;
            bool ok = true;
            for (std::size_t x = 0; x < m && ok; ++x) ok = (good[x] & chosen) != 0;
            if (ok) {
                CoverWitness w{n, {}, CoverSource::Lexmax};
                for (auto it = idx.rbegin(); it != idx.rend(); ++it) w.members.push_back(slice[*it]);
                return w;
            }
            // Next combination in descending order: lower the rightmost
            // position that still leaves room below it.
            bool advanced = false;
            for (std::size_t k = j; k-- > 0;) {
                if (idx[k] > j - 1 - k) {
                    --idx[k];
                    for (std::size_t t = k + 1; t < j; ++t) idx[t] = idx[t - 1] - 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    return std::nullopt;
}

std::optional<CoverWitness> lexmax_cover(const MultiMap& f, const TargetSet& b, unsigned n) {
    auto slice = words_of_length(n);
    PropertyReport sel = is_selector_for(f, b, slice);
    if (!sel.pass) {
        throw PreconditionError("lexmax_cover: " + f.name() + " is not a selector for B, witness " +
                                sel.witness->str());
    }
    auto w = lexmax_cover(f, n);
    if (w && !b.members_of_length(n).empty()) {
        bool meets = std::any_of(w->members.begin(), w->members.end(),
                                 [&](const Word& y) { return b.contains(y); });
        if (!meets) {
            throw InvariantError("lexmax_cover: cover misses B at length " + std::to_string(n));
        }
    }
    return w;
}

PrintResult printable_subset(const MultiMap& f, const TargetSet& b, unsigned n, CoverSource mode) {
    PrintResult out;
    for (unsigned i = 0; i <= n; ++i) {
        std::optional<CoverWitness> cover;
        if (mode == CoverSource::Lexmax) {
            cover = lexmax_cover(f, b, i);
        } else if (!b.members_of_length(i).empty()) {
            cover = dominating_cover(f, b, i);
        }
        if (!cover) continue;
        out.queries += cover->members.size();
        for (const Word& y : cover->members) {
            if (b.contains(y)) out.words.push_back(y);
        }
    }
    std::sort(out.words.begin(), out.words.end());
    return out;
}

HintSet HintSet::even() { return HintSet(Kind::Even, {}, "even"); }
HintSet HintSet::odd() { return HintSet(Kind::Odd, {}, "odd"); }
HintSet HintSet::all() { return HintSet(Kind::All, {}, "all"); }

HintSet HintSet::list(std::vector<unsigned> lengths) {
    std::sort(lengths.begin(), lengths.end());
    std::string label = "list:";
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        label += (i ? "," : "") + std::to_string(lengths[i]);
    }
    return HintSet(Kind::List, std::move(lengths), label);
}

HintSet HintSet::parse(const std::string& text) {
    if (text == "even") return even();
    if (text == "odd") return odd();
    if (text == "all") return all();
    if (text.rfind("list:", 0) == 0) {
        std::vector<unsigned> lengths;
        std::stringstream ss(text.substr(5));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            try {
                std::size_t used = 0;
                unsigned long v = std::stoul(item, &used);
                if (used != item.size()) throw std::invalid_argument(item);
                lengths.push_back(static_cast<unsigned>(v));
            } catch (const std::exception&) {
                throw ConfigError("bad hint length '" + item + "'");
            }
        }
        return list(std::move(lengths));
    }
    throw ConfigError("unknown hint '" + text + "' (expected even, odd, all or list:...)");
}

bool HintSet::contains(unsigned n) const {
    switch (kind_) {
    case Kind::Even: return n % 2 == 0;
    case Kind::Odd: return n % 2 == 1;
    case Kind::All: return true;
    case Kind::List: return std::binary_search(lengths_.begin(), lengths_.end(), n);
    }
    return false;
}

std::vector<Word> hinted_subset(const MultiMap& f, const TargetSet& b, const HintSet& t,
                                unsigned n) {
    std::vector<Word> out;
    for (unsigned i = 0; i <= n; ++i) {
        if (!t.contains(i)) continue;
        if (b.members_of_length(i).empty()) {
            throw PreconditionError("hinted_subset: hint promises a member of length " +
                                    std::to_string(i) + " but B has none");
        }
        TopResult top = top_string(f, i, TopMethod::Scan);
        if (!b.contains(*top.word)) {
            throw PreconditionError("hinted_subset: top word " + top.word->str() +
                                    " is not in B; " + f.name() + " is not a selector for B");
        }
        out.push_back(*top.word);
    }
    return out;
}

} // namespace assocsel
