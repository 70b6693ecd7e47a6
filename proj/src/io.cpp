#include "assocsel/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

#include "assocsel/errors.hpp"
#include "assocsel/transforms.hpp"

namespace assocsel {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

unsigned parse_max_len(const std::string& token, const std::string& source, std::size_t line) {
    unsigned v = 0;
    try {
        std::size_t used = 0;
        unsigned long raw = std::stoul(token, &used);
        if (used != token.size() || raw > Universe::kMaxMaterialized) throw std::out_of_range("");
        v = static_cast<unsigned>(raw);
    } catch (const std::exception&) {
        throw ParseError(source, line,
                         "bad maxlen '" + token + "' (0.." +
                             std::to_string(Universe::kMaxMaterialized) + ")");
    }
    return v;
}

Word parse_word_at(const std::string& token, const std::string& source, std::size_t line) {
    try {
        return Word::parse(token);
    } catch (const Error& e) {
        throw ParseError(source, line, "bad word '" + token + "'");
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    return in;
}

} // namespace

SetFile parse_set(std::istream& in, const std::string& source,
                  std::optional<unsigned> default_max_len) {
    std::optional<unsigned> header;
    std::vector<std::pair<Word, std::size_t>> words;
    bool seen_content = false;
    std::string raw;
    for (std::size_t line = 1; std::getline(in, raw); ++line) {
        const std::string text = trim(raw);
        if (text.empty() || text[0] == '#') continue;
        auto tokens = split_ws(text);
        if (tokens[0] == "maxlen") {
            if (seen_content) throw ParseError(source, line, "maxlen header must come first");
            if (tokens.size() != 2) throw ParseError(source, line, "expected 'maxlen N'");
            header = parse_max_len(tokens[1], source, line);
            seen_content = true;
            continue;
        }
        seen_content = true;
        if (tokens.size() != 1) throw ParseError(source, line, "expected one word per line");
        words.emplace_back(parse_word_at(tokens[0], source, line), line);
    }
    unsigned max_len = 0;
    if (header) {
        max_len = *header;
    } else if (default_max_len) {
        max_len = *default_max_len;
    } else {
        for (const auto& [w, line] : words) max_len = std::max(max_len, w.length());
    }
    SetFile out{TargetSet(Universe(max_len)), header.has_value(), {}};
    for (const auto& [w, line] : words) {
        if (w.length() > max_len) {
            throw ParseError(source, line,
                             "word '" + w.str() + "' longer than maxlen " + std::to_string(max_len));
        }
        if (out.set.contains(w)) {
            out.warnings.push_back(source + ":" + std::to_string(line) + ": duplicate word '" +
                                   w.str() + "'");
        }
        out.set.insert(w);
    }
    return out;
}

SetFile parse_set_file(const std::string& path, std::optional<unsigned> default_max_len) {
    auto in = open_or_throw(path);
    return parse_set(in, path, default_max_len);
}

void write_set(std::ostream& out, const TargetSet& b) {
    out << "maxlen " << b.universe().max_len() << "\n";
    for (const Word& w : b.members()) out << w.str() << "\n";
}

MultiMap parse_table(std::istream& in, const std::string& source) {
    std::string raw;
    std::size_t line = 0;
    std::optional<MultiMap> f;
    std::vector<bool> seen;
    while (std::getline(in, raw)) {
        ++line;
        const std::string text = trim(raw);
        if (text.empty() || text[0] == '#') continue;
        auto tokens = split_ws(text);
        if (!f) {
            if (tokens.size() < 3 || tokens.size() > 4 || tokens[0] != "table" ||
                tokens[1] != "maxlen") {
                throw ParseError(source, line, "expected 'table maxlen N [single|multi]'");
            }
            const unsigned n = parse_max_len(tokens[2], source, line);
            bool single = false;
            if (tokens.size() == 4) {
                if (tokens[3] == "single") {
                    single = true;
                } else if (tokens[3] != "multi") {
                    throw ParseError(source, line, "mode must be single or multi");
                }
            }
            Universe u(n);
            if (u.size() > MultiMap::kMaxTableWords) {
                throw ParseError(source, line, "maxlen " + tokens[2] + " too large for a table");
            }
            f = MultiMap::empty_table(u, single, source);
            seen.assign(u.size() * u.size(), false);
            continue;
        }
        if (tokens.size() != 4 || tokens[2] != "->") {
            throw ParseError(source, line, "expected 'x y -> V'");
        }
        const Word x = parse_word_at(tokens[0], source, line);
        const Word y = parse_word_at(tokens[1], source, line);
        const Universe& u = f->universe();
        if (!u.contains(x) || !u.contains(y)) {
            throw ParseError(source, line, "word longer than maxlen");
        }
        ValueSet v;
        if (tokens[3] == "x") {
            v = ValueSet::x();
        } else if (tokens[3] == "y") {
            v = ValueSet::y();
        } else if (tokens[3] == "xy") {
            v = ValueSet::xy();
        } else if (tokens[3] == "none") {
            v = ValueSet::none();
        } else {
            throw ParseError(source, line, "value must be x, y, xy or none");
        }
        if (x == y && v != ValueSet::x() && v != ValueSet::none()) {
            throw ParseError(source, line, "diagonal value must be x or none");
        }
        if (f->single_valued() && v.both()) {
            throw ParseError(source, line, "xy in a single-valued table");
        }
        const std::size_t cell = x.rank() * u.size() + y.rank();
        if (seen[cell]) throw ParseError(source, line, "pair listed twice");
        seen[cell] = true;
        f->set(x, y, v);
    }
    if (!f) throw ParseError(source, line, "missing table header");
    return *f;
}

MultiMap parse_table_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_table(in, path);
}

void write_table(std::ostream& out, const MultiMap& f) {
    const Universe& u = f.universe();
    if (u.size() > MultiMap::kMaxTableWords) {
        throw RangeError("write_table: universe too large for the TABLE format");
    }
    out << "table maxlen " << u.max_len() << (f.single_valued() ? " single" : " multi") << "\n";
    auto words = words_up_to(u.max_len());
    for (const Word& x : words) {
        for (const Word& y : words) {
            const ValueSet v = f.eval(x, y);
            if (x == y ? !v.empty() : v.empty()) continue;
            out << x.str() << " " << y.str() << " -> " << to_string(v) << "\n";
        }
    }
}

namespace {

struct SpecArgs {
    std::optional<std::string> set;
    std::optional<std::string> base;
    std::optional<std::string> lengths;
    std::optional<std::string> upto;
};

// key=value pairs separated by ';'. `base` holds a nested spec that may
// itself contain ';', so plain keys are peeled off the right end first.
SpecArgs parse_args(const std::string& text, const std::string& fragment) {
    static const std::regex plain(R"(^(set|lengths|upto)=([^;]*)$)");
    SpecArgs args;
    auto assign = [&](const std::string& key, const std::string& value) {
        std::optional<std::string>* slot = key == "set"       ? &args.set
                                           : key == "base"    ? &args.base
                                           : key == "lengths" ? &args.lengths
                                           : key == "upto"    ? &args.upto
                                                              : nullptr;
        if (!slot) throw ConfigError("unknown argument '" + key + "' in '" + fragment + "'");
        if (slot->has_value()) {
            throw ConfigError("argument '" + key + "' given twice in '" + fragment + "'");
        }
        *slot = value;
    };
    std::string rest = text;
    const auto base_at = rest.find("base=");
    if (base_at != std::string::npos && (base_at == 0 || rest[base_at - 1] == ';')) {
        std::string tail = rest.substr(base_at + 5);
        rest = base_at == 0 ? "" : rest.substr(0, base_at - 1);
        for (;;) {
            const auto semi = tail.rfind(';');
            std::smatch m;
            const std::string last = semi == std::string::npos ? "" : tail.substr(semi + 1);
            if (semi == std::string::npos || !std::regex_match(last, m, plain)) break;
            assign(m[1], m[2]);
            tail.resize(semi);
        }
        assign("base", tail);
    }
    std::istringstream in(rest);
    for (std::string part; std::getline(in, part, ';');) {
        if (part.empty()) continue;
        const auto eq = part.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("expected key=value, got '" + part + "' in '" + fragment + "'");
        }
        assign(part.substr(0, eq), part.substr(eq + 1));
    }
    return args;
}

void fix_max_len(std::optional<unsigned>& max_len, unsigned found, const std::string& what) {
    if (!max_len) {
        max_len = found;
    } else if (*max_len != found) {
        throw ConfigError(what + " has maxlen " + std::to_string(found) + " but maxlen " +
                          std::to_string(*max_len) + " is in effect");
    }
}

unsigned need_max_len(const std::optional<unsigned>& max_len, const std::string& fragment) {
    if (!max_len) throw ConfigError("'" + fragment + "' needs --maxlen");
    return *max_len;
}

TargetSet load_set(const std::optional<std::string>& path, std::optional<unsigned>& max_len,
                   const std::string& fragment) {
    if (!path) throw ConfigError("'" + fragment + "' needs set=PATH");
    SetFile sf = parse_set_file(*path, max_len);
    fix_max_len(max_len, sf.set.universe().max_len(), "set file '" + *path + "'");
    return sf.set;
}

std::vector<unsigned> parse_lengths(const std::string& text, const std::string& fragment) {
    std::vector<unsigned> out;
    std::istringstream in(text);
    for (std::string part; std::getline(in, part, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(static_cast<unsigned>(std::stoul(part, &used)));
            if (used != part.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ConfigError("bad length list '" + text + "' in '" + fragment + "'");
        }
    }
    return out;
}

MultiMap build(const std::string& spec, std::optional<unsigned>& max_len) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto no_body = [&] {
        if (colon != std::string::npos) throw ConfigError("'" + head + "' takes no arguments");
    };
    auto inner = [&] {
        if (body.empty()) throw ConfigError("'" + head + "' needs an inner spec");
        return maybe_tabulated(build(body, max_len));
    };
    if (head == "maxlex") {
        no_body();
        return maxlex(Universe(need_max_len(max_len, spec)));
    }
    if (head == "minlex") {
        no_body();
        return minlex(Universe(need_max_len(max_len, spec)));
    }
    if (head == "minmax-cx") {
        no_body();
        return minmax_counterexample(Universe(need_max_len(max_len, spec)));
    }
    if (head == "partial-cx") {
        no_body();
        return partial_counterexample(Universe(need_max_len(max_len, spec)));
    }
    if (head == "table") {
        MultiMap f = parse_table_file(body);
        fix_max_len(max_len, f.universe().max_len(), "table '" + body + "'");
        return f;
    }
    if (head == "prefer") {
        SpecArgs a = parse_args(body, spec);
        return prefer(load_set(a.set, max_len, spec));
    }
    if (head == "prime") return minmax_commutativize(inner());
    if (head == "dprime") return maxvals_commutativize(inner());
    if (head == "hat") return union_commutativize(inner());
    if (head == "assoc") return associativize_total(inner());
    if (head == "assocp") return associativize_partial(inner());
    if (head == "assocf") return associativize_full(inner());
    if (head == "score" || head == "gapset" || head == "etime") {
        SpecArgs a = parse_args(body, spec);
        TargetSet b = load_set(a.set, max_len, spec);
        if (head == "gapset") {
            if (a.base || a.upto) throw ConfigError("gapset takes set= and lengths= only");
            auto lengths =
                a.lengths ? parse_lengths(*a.lengths, spec) : default_gap_lengths(*max_len);
            return gapset_selector(b, lengths);
        }
        if (a.lengths) throw ConfigError("'" + head + "' takes no lengths=");
        if (!a.base) throw ConfigError("'" + spec + "' needs base=SPEC");
        MultiMap base = maybe_tabulated(build(*a.base, max_len));
        if (head == "score") {
            if (a.upto) throw ConfigError("score takes no upto=");
            return score_selector(base, b);
        }
        if (a.upto && parse_lengths(*a.upto, spec) != std::vector<unsigned>{*max_len}) {
            throw ConfigError("etime upto= must equal the maxlen in effect (" +
                              std::to_string(*max_len) + ")");
        }
        return etime_selector(b, base, *max_len).selector;
    }
    throw ConfigError("unknown selector '" + head + "'");
}

} // namespace

MultiMap parse_selector_spec(const std::string& spec, std::optional<unsigned>& max_len) {
    try {
        // Forcing a table evaluates every cell, so lazy checks fire here.
        return maybe_tabulated(build(spec, max_len));
    } catch (const ConfigError&) {
        throw;
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError("'" + spec + "': " + e.what());
    }
}

} // namespace assocsel
