#include "assocsel/advice.hpp"

#include <algorithm>
#include <cctype>

#include "assocsel/digraph.hpp"
#include "assocsel/errors.hpp"

namespace assocsel {

std::string to_string(AdviceKind k) {
    switch (k) {
    case AdviceKind::P: return "p";
    case AdviceKind::NP: return "np";
    case AdviceKind::CoNP: return "conp";
    case AdviceKind::Strong: return "strong";
    }
    return "?";
}

AdviceKind parse_advice_kind(const std::string& text) {
    std::string s = text;
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "p") return AdviceKind::P;
    if (s == "np") return AdviceKind::NP;
    if (s == "conp") return AdviceKind::CoNP;
    if (s == "strong") return AdviceKind::Strong;
    throw ConfigError("unknown advice kind '" + text + "' (expected p, np, conp or strong)");
}

namespace {

void require(const PropertyReport& r, const MultiMap& f, const std::string& op,
             const std::string& where) {
    if (!r.pass) {
        std::string w = r.witness ? ", witness " + r.witness->str() : "";
        throw PreconditionError(op + ": " + f.name() + " is not " + r.property + " on " + where +
                                w);
    }
}

void require_selector_on(const MultiMap& f, const TargetSet& b, const std::vector<Word>& d,
                         const std::string& op) {
    require(is_selector_for(f, b, d), f, op, "the checked slice");
}

Word one_prefixed(const Word& w) { return Word::ones(1).concat(w); }

} // namespace

AdvicePackage extract_source_advice(const MultiMap& f, const TargetSet& b, unsigned n,
                                    bool strong) {
    const std::string op = strong ? "strong source advice" : "source advice";
    AdvicePackage pkg{n, strong ? AdviceKind::Strong : AdviceKind::P, Word::zeros(n + 1),
                      f.name()};
    auto slice = strong ? words_up_to(n) : words_of_length(n);
    auto members = strong ? b.members_up_to(n) : b.members_of_length(n);
    require_selector_on(f, b, slice, op);
    BasicReports basic = check_basic(f, slice);
    require(basic.single_valued, f, op, "the slice");
    if (members.empty()) return pkg;

    const std::string where = strong ? "B^{≤n}" : "B^{=n}";
    require(check_total(f, members), f, op, where);
    require(check_commutative(f, members), f, op, where);
    require(is_associative_on(f, members), f, op, where);

    Digraph g = induce(f, members);
    auto s = extremal_node(g, End::Source);
    if (!s) {
        throw InvariantError(op + ": transitive s-tournament without a source node");
    }
    pkg.advice = strong ? Word(s->rank() + 1, n + 1) : one_prefixed(*s);
    return pkg;
}

AdvicePackage extract_clique_advice(const MultiMap& f, const TargetSet& b, unsigned n,
                                    AdviceKind side) {
    if (side != AdviceKind::NP && side != AdviceKind::CoNP) {
        throw PreconditionError("clique advice is for the np and conp kinds");
    }
    const std::string op = side == AdviceKind::NP ? "np advice" : "conp advice";
    AdvicePackage pkg{n, side, Word::zeros(n + 1), f.name()};
    auto slice = words_of_length(n);
    auto members = b.members_of_length(n);
    require_selector_on(f, b, slice, op);
    if (members.empty()) return pkg;

    require(check_total(f, slice), f, op, "Σ^n");
    require(check_commutative(f, slice), f, op, "Σ^n");
    if (side == AdviceKind::NP) {
        require(is_associative_on(f, members), f, op, "B^{=n}");
        auto clique = extremal_clique(induce(f, members), End::Source);
        pkg.advice = one_prefixed(*std::min_element(clique.begin(), clique.end()));
        return pkg;
    }
    auto outside = b.nonmembers_of_length(n);
    if (outside.empty()) {
        pkg.advice = n == 0 ? Word::ones(1) : Word::zeros(1).concat(Word::ones(n));
        return pkg;
    }
    require(is_associative_on(f, outside), f, op, "Σ^n − B^{=n}");
    auto clique = extremal_clique(induce(f, outside), End::Target);
    pkg.advice = one_prefixed(*std::max_element(clique.begin(), clique.end()));
    return pkg;
}

AdvicePackage extract_advice(const MultiMap& f, const TargetSet& b, unsigned n, AdviceKind kind) {
    switch (kind) {
    case AdviceKind::P: return extract_source_advice(f, b, n, false);
    case AdviceKind::Strong: return extract_source_advice(f, b, n, true);
    default: return extract_clique_advice(f, b, n, kind);
    }
}

bool decode(const AdvicePackage& pkg, const Word& x, const MultiMap& f) {
    if (pkg.kind == AdviceKind::Strong ? x.length() > pkg.n : x.length() != pkg.n) {
        throw PreconditionError("decode: word " + x.str() + " does not fit advice for length " +
                                std::to_string(pkg.n));
    }
    const Word& a = pkg.advice;
    if (a.length() != pkg.n + 1) {
        throw FormatError("advice " + a.str() + " does not have " + std::to_string(pkg.n + 1) +
                          " bits");
    }
    if (pkg.kind == AdviceKind::Strong) {
        if (a.bits() == 0) return false;
        const Word s = Word::from_rank(a.bits() - 1);
        return f.eval(x, s) == ValueSet::x() || x == s;
    }
    if (pkg.kind == AdviceKind::CoNP) {
        if (pkg.n == 0) return a.bit(0);
        if (!a.bit(0)) return a.suffix_from(1) == Word::ones(pkg.n);
        const Word v = a.suffix_from(1);
        return !f.yields(x, v, v);
    }
    if (!a.bit(0)) return false;
    const Word y = a.suffix_from(1);
    if (pkg.kind == AdviceKind::P) return x == y || f.eval(x, y) == ValueSet::x();
    return f.yields(y, x, x);
}

std::vector<PairCode> decoder_members(const AdvicePackage& pkg, const MultiMap& f,
                                      std::size_t cap) {
    std::vector<PairCode> out;
    auto words = pkg.kind == AdviceKind::Strong ? words_up_to(pkg.n) : words_of_length(pkg.n);
    for (const Word& x : words) {
        if (out.size() >= cap) break;
        if (decode(pkg, x, f)) out.push_back(encode_pair(x, pkg.advice));
    }
    return out;
}

RoundtripResult verify_roundtrip(const MultiMap& f, const TargetSet& b, unsigned n,
                                 AdviceKind kind) {
    RoundtripResult out;
    out.report = PropertyReport{"advice-roundtrip(" + to_string(kind) + ")", true, std::nullopt, {}};
    for (unsigned len = 0; len <= n; ++len) {
        AdvicePackage pkg = extract_advice(f, b, len, kind);
        bool ok = pkg.advice.length() == len + 1;
        std::optional<Word> bad;
        auto words = kind == AdviceKind::Strong ? words_up_to(len) : words_of_length(len);
        for (const Word& x : words) {
            if (decode(pkg, x, f) != b.contains(x)) {
                ok = false;
                bad = x;
                break;
            }
        }
        if (!ok && out.report.pass) {
            out.report.pass = false;
            out.report.note = "length " + std::to_string(len) + " advice " + pkg.advice.str();
            if (bad) out.report.witness = Witness{{*bad}, {}};
        }
        out.length_ok.push_back(ok);
        out.packages.push_back(std::move(pkg));
    }
    return out;
}

} // namespace assocsel
