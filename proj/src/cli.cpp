#include "assocsel/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "assocsel/advice.hpp"
#include "assocsel/digraph.hpp"
#include "assocsel/errors.hpp"
#include "assocsel/functions.hpp"
#include "assocsel/io.hpp"
#include "assocsel/transforms.hpp"
#include "assocsel/witness.hpp"

namespace assocsel {

namespace {

enum class Format { Text, Lines, Dot };

struct RunConfig {
    std::optional<unsigned> max_len;
    std::uint64_t seed = 1;
    Format format = Format::Text;
    std::string out_path;

    std::string selector;
    std::string set_path;
    std::string props;
    std::string dump_path;
    std::string vertices_path;
    std::optional<unsigned> length;
    std::optional<unsigned> upto;
    std::string kind = "p";
    std::size_t decoder_cap = 0;
    std::string op = "score";
    std::string hint = "all";
    std::string mode;
    unsigned size = 3;
    bool noncommutative = false;
    bool partial = false;
};

std::string join(const std::vector<Word>& ws) {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += ",";
        out += ws[i].str();
    }
    return out;
}

std::string braces(const std::vector<Word>& ws) { return "{" + join(ws) + "}"; }

const char* pf(bool pass) { return pass ? "PASS" : "FAIL"; }

// Collects report lines and the overall verdict.
class Report {
public:
    explicit Report(Format f) : format_(f) {}
    Format format() const { return format_; }
    bool text() const { return format_ != Format::Lines; }
    void line(const std::string& s) { lines_.push_back(s); }
    // Text and machine-readable renderings of the same result.
    void result(bool pass, const std::string& text, const std::string& kv) {
        ok_ = ok_ && pass;
        line(format_ == Format::Lines ? kv : text);
    }
    void fail() { ok_ = false; }
    bool ok() const { return ok_; }
    const std::vector<std::string>& lines() const { return lines_; }

private:
    Format format_;
    std::vector<std::string> lines_;
    bool ok_ = true;
};

struct Loaded {
    MultiMap f;
    std::optional<TargetSet> b;
};

std::optional<TargetSet> load_target(const RunConfig& cfg, std::optional<unsigned>& max_len,
                                     std::ostream& err) {
    if (cfg.set_path.empty()) return std::nullopt;
    SetFile sf = parse_set_file(cfg.set_path, max_len);
    for (const auto& w : sf.warnings) err << "warning: " << w << "\n";
    const unsigned file_len = sf.set.universe().max_len();
    if (max_len && *max_len != file_len) {
        throw ConfigError(cfg.set_path + " has maxlen " + std::to_string(file_len) +
                          " but --maxlen is " + std::to_string(*max_len));
    }
    max_len = file_len;
    return sf.set;
}

Loaded load(const RunConfig& cfg, std::ostream& err, bool need_set) {
    if (cfg.selector.empty()) throw ConfigError("--selector is required");
    std::optional<unsigned> max_len = cfg.max_len;
    auto b = load_target(cfg, max_len, err);
    if (need_set && !b) throw ConfigError("--set is required");
    MultiMap f = parse_selector_spec(cfg.selector, max_len);
    if (b && b->universe() != f.universe()) {
        throw ConfigError("selector and set use different universes");
    }
    return Loaded{std::move(f), std::move(b)};
}

std::string witness_args(const PropertyReport& r) {
    return r.witness ? " witness=" + join(r.witness->args) : "";
}

void emit_property(Report& rep, const std::string& key, const PropertyReport& r) {
    rep.result(r.pass, r.str(), "CHECK prop=" + key + " result=" + pf(r.pass) + witness_args(r));
}

// A precondition failure is reported as a failed property.
template <typename Fn>
PropertyReport guarded(const std::string& name, Fn&& fn) {
    try {
        return fn();
    } catch (const PreconditionError& e) {
        return PropertyReport{name, false, std::nullopt, e.what()};
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string part; std::getline(in, part, sep);) {
        if (!part.empty()) out.push_back(part);
    }
    return out;
}

void run_properties(const RunConfig& cfg, const Loaded& in, Report& rep) {
    const MultiMap& f = in.f;
    auto d = words_up_to(f.universe().max_len());
    std::string props = cfg.props;
    if (props.empty()) props = in.b ? "total,commutative,single,assoc,selector"
                                    : "total,commutative,single,assoc";
    auto need_b = [&](const std::string& key) -> const TargetSet& {
        if (!in.b) throw ConfigError("property '" + key + "' needs --set");
        return *in.b;
    };
    for (const std::string& key : split(props, ',')) {
        PropertyReport r;
        if (key == "total") {
            r = check_total(f, d);
        } else if (key == "commutative") {
            r = check_commutative(f, d);
        } else if (key == "single") {
            r = check_basic(f, d).single_valued;
        } else if (key == "assoc") {
            r = guarded("associative", [&] { return is_associative_on(f, d); });
        } else if (key == "weak") {
            r = is_weakly_associative_on(f, d);
        } else if (key == "strong") {
            r = is_strongly_associative_on(f, d);
        } else if (key == "lengthwise") {
            r = is_associative_at_each_length(f, f.universe().max_len()).summary;
        } else if (key == "selector") {
            r = is_selector_for(f, need_b(key), d);
        } else if (key == "triples") {
            r = guarded("triple-conditions", [&] { return triple_conditions_check(f, d).report; });
        } else if (key == "totality") {
            const TargetSet& b = need_b(key);
            r = guarded("totality", [&] { return totality_consequence(f, b); });
        } else {
            throw ConfigError("unknown property '" + key + "'");
        }
        emit_property(rep, key, r);
    }
}

void cmd_check(const RunConfig& cfg, Report& rep, std::ostream& err) {
    Loaded in = load(cfg, err, false);
    if (rep.text()) rep.line("selector " + in.f.name() + " maxlen " +
                             std::to_string(in.f.universe().max_len()));
    run_properties(cfg, in, rep);
}

void cmd_transform(const RunConfig& cfg, Report& rep, std::ostream& err) {
    Loaded in = load(cfg, err, false);
    if (rep.text()) rep.line("selector " + in.f.name() + " maxlen " +
                             std::to_string(in.f.universe().max_len()));
    run_properties(cfg, in, rep);
    if (!cfg.dump_path.empty()) {
        std::ofstream out(cfg.dump_path);
        if (!out) throw ConfigError("cannot write '" + cfg.dump_path + "'");
        write_table(out, in.f);
        rep.line(rep.format() == Format::Lines ? "DUMP path=" + cfg.dump_path
                                               : "dumped table to " + cfg.dump_path);
    }
}

void cmd_digraph(const RunConfig& cfg, Report& rep, std::ostream& err) {
    Loaded in = load(cfg, err, false);
    std::vector<Word> vs;
    if (!cfg.vertices_path.empty()) {
        std::optional<unsigned> ml = in.f.universe().max_len();
        vs = parse_set_file(cfg.vertices_path, ml).set.members();
    } else if (cfg.length) {
        if (*cfg.length > in.f.universe().max_len()) throw ConfigError("--length exceeds maxlen");
        vs = words_of_length(*cfg.length);
    } else if (in.b) {
        vs = in.b->members();
    } else {
        vs = words_up_to(in.f.universe().max_len());
    }
    Digraph g = induce(in.f, vs);
    GraphClass c = classify(g);
    // The equivalence suites only speak about the two graph families.
    std::optional<EquivalenceReport> eq;
    if (c.s_tournament || c.complete_digraph) eq = verify_equivalences(g, cfg.seed);
    PropertyReport tr = is_transitive(g);
    bool pass = !eq || eq->report.pass;
    std::optional<std::vector<Word>> dom;
    if (c.s_tournament) {
        dom = dominating_set(g);
        pass = pass && dominates(g, *dom) && dom->size() <= domination_bound(g.size());
    }
    if (rep.format() == Format::Dot) {
        if (!pass) rep.fail();
        std::istringstream dot(to_dot(g, "G"));
        for (std::string l; std::getline(dot, l);) rep.line(l);
        return;
    }
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    if (rep.format() == Format::Lines) {
        rep.line("DIGRAPH vertices=" + std::to_string(g.size()) +
                 " s_tournament=" + yn(c.s_tournament) + " complete=" + yn(c.complete_digraph) +
                 " strong_clique=" + yn(c.strong_clique) + " transitive=" + pf(tr.pass));
        if (eq) {
            rep.result(eq->report.pass, "",
                       "EQUIV family=" + eq->family + " subsets=" +
                           std::to_string(eq->subsets_checked) + " result=" + pf(eq->report.pass));
        }
        if (dom) {
            bool ok = dominates(g, *dom) && dom->size() <= domination_bound(g.size());
            rep.result(ok, "",
                       "DOMINATING members=" + join(*dom) + " size=" + std::to_string(dom->size()) +
                           " bound=" + std::to_string(domination_bound(g.size())) +
                           " result=" + pf(ok));
        }
        return;
    }
    rep.line("vertices " + std::to_string(g.size()) + ": " + braces(vs));
    rep.line(std::string("s-tournament ") + yn(c.s_tournament) + ", complete " +
             yn(c.complete_digraph) + ", strong clique " + yn(c.strong_clique));
    rep.line(tr.str());
    std::string comps = "components";
    for (const auto& comp : strong_components(g)) {
        std::vector<Word> ws;
        for (std::size_t i : comp) ws.push_back(g.vertex(i));
        comps += " " + braces(ws);
    }
    rep.line(comps);
    auto cyc = long_cycle(g);
    rep.line("long cycle " + (cyc ? join(*cyc) : std::string("none")));
    auto src = extremal_node(g, End::Source);
    auto tgt = extremal_node(g, End::Target);
    rep.line("source " + (src ? src->str() : std::string("none")) + ", target " +
             (tgt ? tgt->str() : std::string("none")));
    if (c.complete_digraph && tr.pass) {
        std::string line = "cliques";
        for (const auto& block : condensation(g)) line += " " + braces(block);
        rep.line(line);
    }
    if (dom) {
        bool ok = dominates(g, *dom) && dom->size() <= domination_bound(g.size());
        rep.result(ok,
                   std::string(pf(ok)) + " dominating set " + braces(*dom) + " size " +
                       std::to_string(dom->size()) + " bound " +
                       std::to_string(domination_bound(g.size())),
                   "");
    }
    if (eq) {
        rep.result(eq->report.pass,
                   eq->report.str() + " [" + eq->family + ", " +
                       std::to_string(eq->subsets_checked) + " subsets]",
                   "");
    } else {
        rep.line("neither an s-tournament nor a complete digraph; equivalences not applicable");
    }
}

void cmd_advice(const RunConfig& cfg, Report& rep, std::ostream& err) {
    Loaded in = load(cfg, err, true);
    const unsigned upto = cfg.upto.value_or(in.f.universe().max_len());
    if (upto > in.f.universe().max_len()) throw ConfigError("--upto exceeds maxlen");
    RoundtripResult rt = verify_roundtrip(in.f, *in.b, upto, parse_advice_kind(cfg.kind));
    for (std::size_t n = 0; n < rt.packages.size(); ++n) {
        const AdvicePackage& pkg = rt.packages[n];
        rep.result(rt.length_ok[n],
                   "ADVICE n=" + std::to_string(n) + " word=" + pkg.advice.str() +
                       " verify=" + pf(rt.length_ok[n]),
                   "ADVICE n=" + std::to_string(n) + " word=" + pkg.advice.str() +
                       " verify=" + pf(rt.length_ok[n]));
        if (cfg.decoder_cap > 0) {
            for (const PairCode& pc : decoder_members(pkg, in.f, cfg.decoder_cap)) {
                auto [x, w] = decode_pair(pc);
                rep.line("MEMBER n=" + std::to_string(n) + " x=" + x.str() + " pair=" +
                         pc.encoded.str());
            }
        }
    }
    if (rep.text()) rep.line(rt.report.str());
}

void cmd_witness(const RunConfig& cfg, Report& rep, std::ostream& err) {
    Loaded in = load(cfg, err, cfg.op != "score" && cfg.op != "top");
    const MultiMap& f = in.f;
    const unsigned upto = cfg.upto.value_or(f.universe().max_len());
    if (upto > f.universe().max_len()) throw ConfigError("--upto exceeds maxlen");
    const bool lines = rep.format() == Format::Lines;
    if (cfg.op == "score") {
        for (unsigned n = 0; n <= upto; ++n) {
            auto sc = scores_at_length(f, n);
            auto words = words_of_length(n);
            for (std::size_t i = 0; i < words.size(); ++i) {
                rep.line((lines ? "SCORE n=" + std::to_string(n) + " word="
                                : "score(") +
                         words[i].str() + (lines ? " score=" : ") = ") + std::to_string(sc[i]));
            }
            auto sorted = sc;
            std::sort(sorted.begin(), sorted.end());
            std::vector<std::uint64_t> expect(sorted.size());
            std::iota(expect.begin(), expect.end(), std::uint64_t{1});
            const bool ok = sorted == expect;
            rep.result(ok,
                       std::string(pf(ok)) + " scores at length " + std::to_string(n) +
                           " are a permutation of 1.." + std::to_string(expect.size()),
                       "PERMUTATION n=" + std::to_string(n) + " result=" + pf(ok));
        }
    } else if (cfg.op == "top") {
        for (unsigned n = 0; n <= upto; ++n) {
            TopResult scan = top_string(f, n, TopMethod::Scan);
            TopResult pre = top_string(f, n, TopMethod::PrefixSearch);
            const bool ok = scan.word && pre.word && *scan.word == *pre.word;
            auto s = [](const TopResult& t) { return t.word ? t.word->str() : std::string("none"); };
            rep.result(ok,
                       std::string(pf(ok)) + " top at length " + std::to_string(n) + ": scan " +
                           s(scan) + ", prefix search " + s(pre) + " (" +
                           std::to_string(pre.queries) + " queries)",
                       "TOP n=" + std::to_string(n) + " scan=" + s(scan) + " prefix=" + s(pre) +
                           " queries=" + std::to_string(pre.queries) + " result=" + pf(ok));
        }
    } else if (cfg.op == "cover") {
        const TargetSet& b = *in.b;
        for (unsigned n = 0; n <= upto; ++n) {
            auto emit = [&](const CoverWitness& w, const std::string& src) {
                auto slice = b.members_of_length(n);
                bool meets = slice.empty() ||
                             std::any_of(w.members.begin(), w.members.end(),
                                         [&](const Word& m) { return b.contains(m); });
                const bool ok = w.members.size() <= n + 1 && covers(f, n, w.members) && meets;
                rep.result(ok,
                           std::string(pf(ok)) + " " + src + " cover at length " +
                               std::to_string(n) + ": " + braces(w.members) + " size " +
                               std::to_string(w.members.size()) + " bound " +
                               std::to_string(n + 1),
                           "COVER n=" + std::to_string(n) + " source=" + src +
                               " members=" + join(w.members) +
                               " size=" + std::to_string(w.members.size()) +
                               " bound=" + std::to_string(n + 1) + " result=" + pf(ok));
            };
            if (!b.members_of_length(n).empty()) emit(dominating_cover(f, b, n), "greedy");
            if (n <= kLexmaxMaxLength) {
                auto lm = lexmax_cover(f, b, n);
                if (lm) {
                    emit(*lm, "lexmax");
                } else {
                    rep.result(false, "FAIL no lexmax cover at length " + std::to_string(n),
                               "COVER n=" + std::to_string(n) + " source=lexmax result=FAIL");
                }
            }
        }
    } else if (cfg.op == "print") {
        const TargetSet& b = *in.b;
        CoverSource mode = CoverSource::Lexmax;
        if (cfg.mode == "greedy") {
            mode = CoverSource::Greedy;
        } else if (!cfg.mode.empty() && cfg.mode != "lexmax") {
            throw ConfigError("--mode must be lexmax or greedy");
        }
        PrintResult pr = printable_subset(f, b, upto, mode);
        bool ok = std::all_of(pr.words.begin(), pr.words.end(),
                              [&](const Word& w) { return b.contains(w); });
        for (unsigned n = 0; n <= upto; ++n) {
            if (b.members_of_length(n).empty()) continue;
            ok = ok && std::any_of(pr.words.begin(), pr.words.end(),
                                   [&](const Word& w) { return w.length() == n; });
        }
        const std::string m = mode == CoverSource::Greedy ? "greedy" : "lexmax";
        rep.result(ok,
                   std::string(pf(ok)) + " printed " + braces(pr.words) + " (" + m + ", " +
                       std::to_string(pr.queries) + " queries)",
                   "PRINT mode=" + m + " words=" + join(pr.words) +
                       " queries=" + std::to_string(pr.queries) + " result=" + pf(ok));
    } else if (cfg.op == "hinted") {
        const TargetSet& b = *in.b;
        HintSet t = HintSet::parse(cfg.hint);
        auto ws = hinted_subset(f, b, t, upto);
        bool ok = std::all_of(ws.begin(), ws.end(), [&](const Word& w) { return b.contains(w); });
        for (unsigned n = 0; n <= upto; ++n) {
            auto k = std::count_if(ws.begin(), ws.end(),
                                   [&](const Word& w) { return w.length() == n; });
            ok = ok && k == (t.contains(n) ? 1 : 0);
        }
        rep.result(ok,
                   std::string(pf(ok)) + " hinted subset " + braces(ws) + " (hint " + t.label() +
                       ")",
                   "HINTED hint=" + t.label() + " words=" + join(ws) + " result=" + pf(ok));
    } else {
        throw ConfigError("unknown --op '" + cfg.op + "'");
    }
}

void cmd_enumerate(const RunConfig& cfg, Report& rep) {
    if (cfg.size < 1 || cfg.size > FunctionClass::kMaxDomain) {
        throw ConfigError("--size must be in 1.." + std::to_string(FunctionClass::kMaxDomain));
    }
    ValueMode mode = ValueMode::Multi;
    if (cfg.mode == "single") {
        mode = ValueMode::Single;
    } else if (!cfg.mode.empty() && cfg.mode != "multi") {
        throw ConfigError("--mode must be single or multi");
    }
    std::vector<Word> d;
    for (unsigned i = 0; i < cfg.size; ++i) d.push_back(Word::from_rank(i));
    const bool comm = !cfg.noncommutative;
    const bool total = !cfg.partial;
    FunctionClass cls(d, mode, comm, total);
    std::uint64_t assoc = 0, transitive = 0, agree = 0;
    for (std::uint64_t i = 0; i < cls.size(); ++i) {
        MultiMap f = cls.at(i);
        const bool a = total ? is_associative_on(f, d).pass : is_strongly_associative_on(f, d).pass;
        assoc += a;
        if (comm && total) {
            const bool t = is_transitive(induce(f, d)).pass;
            transitive += t;
            agree += (a == t);
        }
    }
    const std::string m = mode == ValueMode::Single ? "single" : "multi";
    const std::string label = total ? "associative" : "strongly-associative";
    const std::string total_s = std::to_string(cls.size());
    if (rep.format() == Format::Lines) {
        std::string l = "ENUMERATE size=" + std::to_string(cfg.size) + " mode=" + m +
                        " commutative=" + (comm ? "yes" : "no") + " total=" + (total ? "yes" : "no") +
                        " functions=" + total_s + " " + label + "=" + std::to_string(assoc);
        if (comm && total) {
            l += " transitive=" + std::to_string(transitive) + " agree=" + std::to_string(agree) +
                 " result=" + pf(agree == cls.size());
        }
        rep.result(agree == cls.size() || !(comm && total), "", l);
        return;
    }
    rep.line("domain " + braces(d) + ", " + m + "-valued, " + (comm ? "commutative" : "any") +
             ", " + (total ? "total" : "partial"));
    rep.line(label + " " + std::to_string(assoc) + " / " + total_s);
    if (comm && total) {
        rep.line("transitive " + std::to_string(transitive) + " / " + total_s);
        rep.result(agree == cls.size(),
                   std::string(pf(agree == cls.size())) + " associative iff transitive " +
                       std::to_string(agree) + " / " + total_s,
                   "");
    }
}

// Named rendering of a word set for the demo: {a,c}, or the bare name for a
// singleton when `bare` is set, ∅ for the empty set.
std::string named(const WordSet& s, const NamedWords& nw, bool bare) {
    if (s.empty()) return "∅";
    std::vector<std::string> names;
    for (const Word& w : s) {
        names.push_back(w == nw.a ? "a" : w == nw.b ? "b" : w == nw.c ? "c" : w.str());
    }
    std::sort(names.begin(), names.end());
    if (bare && names.size() == 1) return names[0];
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
    return out + "}";
}

void demo_case(Report& rep, const std::string& id, const MultiMap& g, const NamedWords& nw,
               const Word& p, const Word& q, const Word& r, const std::string& fn, bool bare,
               const std::string& want_left, const std::string& want_right, bool base_assoc) {
    auto name = [&](const Word& w) { return std::string(w == nw.a ? "a" : w == nw.b ? "b" : "c"); };
    WordSet left = eval_ext(g, g.values(q, r), p, Side::Right);
    WordSet right = eval_ext(g, g.values(p, q), r, Side::Left);
    const std::string ls = named(left, nw, bare);
    const std::string rs = named(right, nw, bare);
    const bool ok = base_assoc && ls == want_left && rs == want_right;
    if (rep.format() == Format::Lines) {
        rep.result(ok, "",
                   "DEMO case=" + id + " a=" + nw.a.str() + " b=" + nw.b.str() + " c=" +
                       nw.c.str() + " left=" + ls + " right=" + rs + " result=" + pf(ok));
        return;
    }
    rep.line(id + ": a=" + nw.a.str() + " b=" + nw.b.str() + " c=" + nw.c.str());
    rep.line(std::string("  original function associative on {a,b,c}: ") +
             (base_assoc ? "yes" : "no"));
    const std::string ap = fn + "(" + name(p) + ", " + fn + "(" + name(q) + ", " + name(r) + "))";
    const std::string pa = fn + "(" + fn + "(" + name(p) + ", " + name(q) + "), " + name(r) + ")";
    rep.line("  " + ap + " = " + ls);
    rep.line("  " + pa + " = " + rs);
    rep.result(ok, "  " + ls + " ≠ " + rs + "  " + pf(ok), "");
}

void cmd_demo(Report& rep) {
    {
        NamedWords nw = minmax_counterexample_words();
        MultiMap f = minmax_counterexample(Universe(1));
        const bool base = is_associative_on(f, words_up_to(1)).pass;
        demo_case(rep, "minmax", maybe_tabulated(minmax_commutativize(f)), nw, nw.a, nw.c,
                  nw.b, "set-f'", false, "{a,c}", "{a,b,c}", base);
    }
    NamedWords nw = partial_counterexample_words();
    MultiMap f = partial_counterexample(Universe(2));
    std::vector<Word> abc{nw.a, nw.b, nw.c};
    const bool base = is_strongly_associative_on(f, abc).pass;
    demo_case(rep, "partial-prime", maybe_tabulated(minmax_commutativize(f)), nw, nw.a, nw.b, nw.c,
              "f'", true, "c", "∅", base);
    demo_case(rep, "partial-hat", maybe_tabulated(union_commutativize(f)), nw, nw.a, nw.b, nw.c,
              "set-f^", false, "{c}", "∅", base);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Associative selector toolkit", "assocsel"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--maxlen", cfg.max_len, "maximum word length")
        ->check(CLI::Range(0U, Universe::kMaxMaterialized));
    app.add_option("--seed", cfg.seed, "seed for randomized checks");
    app.add_option("--format", format, "text | lines | dot")
        ->check(CLI::IsMember({"text", "lines", "dot"}));
    app.add_option("--out", cfg.out_path, "write the report here");

    auto with_selector = [&](CLI::App* sub) {
        sub->add_option("--selector", cfg.selector, "selector spec")->required();
        sub->add_option("--set", cfg.set_path, "SET file");
    };

    CLI::App* check = app.add_subcommand("check", "property reports");
    with_selector(check);
    check->add_option("--props", cfg.props,
                      "total,commutative,single,assoc,weak,strong,lengthwise,selector,triples,"
                      "totality");

    CLI::App* transform = app.add_subcommand("transform", "construct, verify, dump");
    with_selector(transform);
    transform->add_option("--props", cfg.props, "as for check");
    transform->add_option("--dump", cfg.dump_path, "write the result as a TABLE file");

    CLI::App* digraph = app.add_subcommand("digraph", "induced digraph analyses");
    with_selector(digraph);
    digraph->add_option("--vertices", cfg.vertices_path, "SET file of vertices");
    digraph->add_option("--length", cfg.length, "use all words of this length");

    CLI::App* advice = app.add_subcommand("advice", "extract and verify advice");
    with_selector(advice);
    advice->add_option("--upto", cfg.upto, "largest length");
    advice->add_option("--kind", cfg.kind, "p | np | conp | strong");
    advice->add_option("--emit-decoder-members", cfg.decoder_cap, "members per length to list");

    CLI::App* witness = app.add_subcommand("witness", "scores, covers, printing");
    with_selector(witness);
    witness->add_option("--upto", cfg.upto, "largest length");
    witness->add_option("--op", cfg.op, "score | top | cover | print | hinted")
        ->check(CLI::IsMember({"score", "top", "cover", "print", "hinted"}));
    witness->add_option("--hint", cfg.hint, "even | odd | all | list:1,3");
    witness->add_option("--mode", cfg.mode, "lexmax | greedy");

    CLI::App* enumerate = app.add_subcommand("enumerate", "exhaustive class counts");
    enumerate->add_option("--size", cfg.size, "domain size (first words in shortlex order)");
    enumerate->add_option("--mode", cfg.mode, "single | multi");
    enumerate->add_flag("--noncommutative", cfg.noncommutative, "drop the commutativity filter");
    enumerate->add_flag("--partial", cfg.partial, "allow undefined values");

    CLI::App* demo = app.add_subcommand("demo", "the non-preservation counterexamples");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    cfg.format = format == "lines" ? Format::Lines : format == "dot" ? Format::Dot : Format::Text;

    Report rep(cfg.format);
    try {
        if (check->parsed()) {
            cmd_check(cfg, rep, err);
        } else if (transform->parsed()) {
            cmd_transform(cfg, rep, err);
        } else if (digraph->parsed()) {
            cmd_digraph(cfg, rep, err);
        } else if (advice->parsed()) {
            cmd_advice(cfg, rep, err);
        } else if (witness->parsed()) {
            cmd_witness(cfg, rep, err);
        } else if (enumerate->parsed()) {
            cmd_enumerate(cfg, rep);
        } else if (demo->parsed()) {
            cmd_demo(rep);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) {
            err << "error: cannot write '" << cfg.out_path << "'\n";
            return 2;
        }
        sink = &file;
    }
    for (const auto& l : rep.lines()) *sink << l << "\n";
    return rep.ok() ? 0 : 1;
}

} // namespace assocsel
