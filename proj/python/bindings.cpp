#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "assocsel/advice.hpp"
#include "assocsel/cli.hpp"
#include "assocsel/digraph.hpp"
#include "assocsel/errors.hpp"
#include "assocsel/functions.hpp"
#include "assocsel/io.hpp"
#include "assocsel/transforms.hpp"
#include "assocsel/witness.hpp"

namespace py = pybind11;
using namespace assocsel;

namespace {

std::string value_code(const ValueSet& v) {
    if (v.both()) return "xy";
    if (v.first) return "x";
    if (v.second) return "y";
    return "none";
}

py::dict report_dict(const PropertyReport& r) {
    py::dict d;
    d["property"] = r.property;
    d["passed"] = r.pass;
    d["witness"] = r.witness ? py::cast(r.witness->str()) : py::none();
    return d;
}

std::vector<Word> universe_words(const MultiMap& f) { return words_up_to(f.universe().max_len()); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Selector functions, associativity checks and their constructions";

    auto base = py::register_exception<Error>(m, "AssocselError", PyExc_RuntimeError);
    py::register_exception<RangeError>(m, "RangeError", base.ptr());
    py::register_exception<FormatError>(m, "FormatError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<InvariantError>(m, "InvariantError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

    py::class_<Word>(m, "Word")
        .def(py::init(&Word::parse), py::arg("text"))
        .def_static("from_rank", &Word::from_rank)
        .def_property_readonly("length", &Word::length)
        .def_property_readonly("rank", &Word::rank)
        .def("__str__", &Word::str)
        .def("__repr__", [](const Word& w) { return "Word('" + w.str() + "')"; })
        .def("__len__", &Word::length)
        .def("__hash__", [](const Word& w) { return w.rank(); })
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self);
    py::implicitly_convertible<py::str, Word>();

    m.def("words_of_length", &words_of_length);
    m.def("words_up_to", &words_up_to);
    m.def("setcode", [](const std::vector<Word>& ws) { return setcode(ws); });

    py::class_<TargetSet>(m, "TargetSet")
        .def(py::init([](unsigned max_len, const std::vector<Word>& members) {
                 return TargetSet(Universe(max_len), members);
             }),
             py::arg("max_len"), py::arg("members") = std::vector<Word>{})
        .def_static("load", [](const std::string& path) { return parse_set_file(path).set; })
        .def_property_readonly("max_len", [](const TargetSet& b) { return b.universe().max_len(); })
        .def("__contains__", &TargetSet::contains)
        .def("__len__", &TargetSet::size)
        .def("members", &TargetSet::members);

    py::class_<MultiMap>(m, "Function")
        .def_property_readonly("name", &MultiMap::name)
        .def_property_readonly("max_len", [](const MultiMap& f) { return f.universe().max_len(); })
        .def_property_readonly("single_valued", &MultiMap::single_valued)
        .def("__call__", [](const MultiMap& f, const Word& x, const Word& y) {
            auto v = f.values(x, y);
            return std::vector<Word>(v.begin(), v.end());
        })
        .def("code", [](const MultiMap& f, const Word& x, const Word& y) {
            return value_code(f.eval(x, y));
        })
        .def("table", [](const MultiMap& f) {
            std::ostringstream out;
            write_table(out, f);
            return out.str();
        })
        .def("__repr__", [](const MultiMap& f) {
            return "Function('" + f.name() + "', max_len=" + std::to_string(f.universe().max_len()) +
                   ")";
        });

    m.def("maxlex", [](unsigned n) { return maxlex(Universe(n)); });
    m.def("minlex", [](unsigned n) { return minlex(Universe(n)); });
    m.def("prefer", &prefer);
    m.def("minmax_counterexample", [](unsigned n) { return minmax_counterexample(Universe(n)); });
    m.def("partial_counterexample", [](unsigned n) { return partial_counterexample(Universe(n)); });
    m.def(
        "parse_selector",
        [](const std::string& spec, std::optional<unsigned> max_len) {
            return parse_selector_spec(spec, max_len);
        },
        py::arg("spec"), py::arg("max_len") = py::none());

    // Checks run over the whole universe unless `on` is given.
    auto domain = [](const MultiMap& f, const std::optional<std::vector<Word>>& on) {
        return on ? *on : universe_words(f);
    };
    m.def("is_total", [=](const MultiMap& f, std::optional<std::vector<Word>> on) {
        return report_dict(check_total(f, domain(f, on)));
    }, py::arg("f"), py::arg("on") = py::none());
    m.def("is_commutative", [=](const MultiMap& f, std::optional<std::vector<Word>> on) {
        return report_dict(check_commutative(f, domain(f, on)));
    }, py::arg("f"), py::arg("on") = py::none());
    m.def("is_associative", [=](const MultiMap& f, std::optional<std::vector<Word>> on) {
        return report_dict(is_associative_on(f, domain(f, on)));
    }, py::arg("f"), py::arg("on") = py::none());
    m.def("is_selector", [](const MultiMap& f, const TargetSet& b) {
        return report_dict(is_selector_for(f, b, universe_words(f)));
    });

    m.def("minmax_commutativize", &minmax_commutativize);
    m.def("maxvals_commutativize", &maxvals_commutativize);
    m.def("union_commutativize", &union_commutativize);
    m.def("associativize_total", &associativize_total);
    m.def("associativize_partial", &associativize_partial);
    m.def("associativize_full", &associativize_full);
    m.def("score_selector", [](const MultiMap& f, const TargetSet& b) { return score_selector(f, b); });
    m.def("gapset_selector", &gapset_selector);
    m.def("etime_selector", [](const TargetSet& b, const MultiMap& base) {
        return etime_selector(b, base, b.universe().max_len()).selector;
    });
    m.def("tabulated", [](const MultiMap& f) { return maybe_tabulated(f); });

    py::class_<Digraph>(m, "Digraph")
        .def_property_readonly("vertices", &Digraph::vertices)
        .def("edges", [](const Digraph& g) {
            std::vector<std::pair<Word, Word>> out;
            for (std::size_t i = 0; i < g.size(); ++i)
                for (std::size_t j = 0; j < g.size(); ++j)
                    if (g.edge(i, j)) out.emplace_back(g.vertex(i), g.vertex(j));
            return out;
        })
        .def("is_transitive", [](const Digraph& g) { return is_transitive(g).pass; })
        .def("dominating_set", &dominating_set)
        .def("to_dot", [](const Digraph& g) { return to_dot(g); });
    m.def("induce", [](const MultiMap& f, const std::vector<Word>& vs) { return induce(f, vs); });

    m.def("extract_advice", [](const MultiMap& f, const TargetSet& b, unsigned n, const std::string& kind) {
        return extract_advice(f, b, n, parse_advice_kind(kind)).advice;
    });
    m.def("verify_roundtrip", [](const MultiMap& f, const TargetSet& b, unsigned n, const std::string& kind) {
        return verify_roundtrip(f, b, n, parse_advice_kind(kind)).report.pass;
    });

    m.def("scores_at_length", &scores_at_length);
    m.def(
        "top_string",
        [](const MultiMap& f, unsigned n, const std::string& method) {
            if (method != "scan" && method != "prefix") throw ConfigError("method is scan or prefix");
            return *top_string(f, n, method == "scan" ? TopMethod::Scan : TopMethod::PrefixSearch).word;
        },
        py::arg("f"), py::arg("n"), py::arg("method") = "scan");
    m.def("dominating_cover", [](const MultiMap& f, const TargetSet& b, unsigned n) {
        return dominating_cover(f, b, n).members;
    });
    m.def("hinted_subset", [](const MultiMap& f, const TargetSet& b, const std::string& hint, unsigned n) {
        return hinted_subset(f, b, HintSet::parse(hint), n);
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
