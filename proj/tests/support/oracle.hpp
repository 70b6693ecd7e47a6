#pragma once

// Deliberately naive reference implementations used as test oracles. They
// work on explicit word sets and share no code with the library checkers.

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "assocsel/functions.hpp"

namespace oracle {

using assocsel::MultiMap;
using assocsel::Word;
using WSet = std::set<Word>;

inline WSet values(const MultiMap& f, const Word& x, const Word& y) {
    WSet out;
    auto v = f.eval(x, y);
    if (v.first) out.insert(x);
    if (v.second) out.insert(y);
    return out;
}

inline WSet apply(const MultiMap& f, const WSet& a, const WSet& b) {
    WSet out;
    for (const Word& x : a)
        for (const Word& y : b)
            for (const Word& z : values(f, x, y)) out.insert(z);
    return out;
}

inline bool associative_triple(const MultiMap& f, const Word& a, const Word& b, const Word& c) {
    return apply(f, {a}, values(f, b, c)) == apply(f, values(f, a, b), {c});
}

inline bool associative(const MultiMap& f, const std::vector<Word>& d) {
    for (const Word& a : d)
        for (const Word& b : d)
            for (const Word& c : d)
                if (!associative_triple(f, a, b, c)) return false;
    return true;
}

inline bool total(const MultiMap& f, const std::vector<Word>& d) {
    for (const Word& a : d)
        for (const Word& b : d)
            if (values(f, a, b).empty()) return false;
    return true;
}

inline bool commutative(const MultiMap& f, const std::vector<Word>& d) {
    for (const Word& a : d)
        for (const Word& b : d)
            if (values(f, a, b) != values(f, b, a)) return false;
    return true;
}

template <typename Member>
bool selector(const MultiMap& f, const std::vector<Word>& d, Member in_b) {
    for (const Word& a : d)
        for (const Word& b : d) {
            if (!in_b(a) && !in_b(b)) continue;
            WSet v = values(f, a, b);
            if (v.empty()) return false;
            for (const Word& z : v)
                if (!in_b(z)) return false;
        }
    return true;
}

// Edge relation straight from the definition: y ∈ set-f(x, y).
inline bool edge(const MultiMap& f, const Word& x, const Word& y) {
    return values(f, x, y).count(y) > 0;
}

inline bool transitive_edges(const MultiMap& f, const std::vector<Word>& d) {
    for (const Word& a : d)
        for (const Word& b : d)
            for (const Word& c : d)
                if (edge(f, a, b) && edge(f, b, c) && !edge(f, a, c)) return false;
    return true;
}

} // namespace oracle
