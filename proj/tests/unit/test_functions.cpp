#include <doctest.h>

#include <random>

#include "assocsel/errors.hpp"
#include "assocsel/functions.hpp"
#include "assocsel/generators.hpp"
#include "assocsel/transforms.hpp"
#include "build.hpp"
#include "oracle.hpp"

using namespace assocsel;
using testutil::w;
using testutil::ws;

namespace {

// A failing report's witness must reproduce the violation when re-evaluated.
void witness_reproduces_assoc(const MultiMap& f, const PropertyReport& r) {
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.witness);
    REQUIRE(r.witness->args.size() == 3);
    const auto& t = r.witness->args;
    CHECK_FALSE(oracle::associative_triple(f, t[0], t[1], t[2]));
    REQUIRE(r.witness->values.size() == 2);
    oracle::WSet left = oracle::apply(f, {t[0]}, oracle::values(f, t[1], t[2]));
    oracle::WSet right = oracle::apply(f, oracle::values(f, t[0], t[1]), {t[2]});
    CHECK(oracle::WSet(r.witness->values[0].second.begin(), r.witness->values[0].second.end()) ==
          left);
    CHECK(oracle::WSet(r.witness->values[1].second.begin(), r.witness->values[1].second.end()) ==
          right);
}

MultiMap three_cycle_length2() {
    // 00 → 01 → 10 → 00 among winners, everything else max.
    return testutil::patched(maxlex(Universe(2)),
                             {{"00", "01", "y"}, {"01", "10", "y"}, {"10", "00", "y"}}, true,
                             "cycle");
}

} // namespace

TEST_SUITE("functions") {

TEST_CASE("eval on the minmax counterexample") {
    MultiMap f = minmax_counterexample(Universe(1));
    CHECK(f.eval(w("-"), w("0")) == ValueSet::x());
    CHECK(f.eval(w("0"), w("-")) == ValueSet::x());
    CHECK(f.eval(w("-"), w("1")) == ValueSet::xy());
    CHECK(f.values(w("-"), w("1")) == WordSet{w("-"), w("1")});
    CHECK(f.eval(w("1"), w("-")) == ValueSet::x());
    CHECK(f.eval(w("0"), w("1")) == ValueSet::xy());
    CHECK(f.eval(w("1"), w("0")) == ValueSet::x());
    CHECK_THROWS_AS(f.eval(w("00"), w("0")), RangeError);
}

TEST_CASE("eval on max and on the partial counterexample") {
    MultiMap m = maxlex(Universe(3));
    for (const Word& x : words_up_to(3)) CHECK(m.eval(x, x) == ValueSet::x());
    MultiMap p = partial_counterexample(Universe(2));
    NamedWords n = partial_counterexample_words();
    CHECK(n.b < n.c);
    CHECK(n.c < n.a);
    CHECK(p.eval(n.a, n.b).empty());
    CHECK(p.eval(n.b, n.a).empty());
    CHECK(p.eval(n.a, n.c).empty());
    CHECK(p.eval(n.c, n.b).empty());
    CHECK(p.values(n.c, n.a) == WordSet{n.c});
    CHECK(p.values(n.b, n.c) == WordSet{n.c});
}

TEST_CASE("eval_ext") {
    MultiMap f = minmax_counterexample(Universe(1));
    CHECK(eval_ext(f, WordSet{}, w("0"), Side::Left).empty());
    CHECK(eval_ext(f, WordSet{w("0"), w("1")}, w("-"), Side::Left) == WordSet{w("0"), w("1")});
    CHECK(eval_ext(f, WordSet{w("-")}, w("1"), Side::Left) == f.values(w("-"), w("1")));
    CHECK(eval_ext(f, WordSet{w("-")}, w("1"), Side::Right) == f.values(w("1"), w("-")));
}

TEST_CASE("single-valued maps refuse two values") {
    MultiMap bad = MultiMap::from_rule(
        Universe(1), [](const Word&, const Word&) { return ValueSet::xy(); }, true, "bad");
    CHECK_THROWS_AS(bad.eval(w("0"), w("1")), InvariantError);
    // the diagonal is normalized before the check
    CHECK(bad.eval(w("0"), w("0")) == ValueSet::x());
}

TEST_CASE("basic reports") {
    auto abc = words_up_to(1);
    MultiMap f = minmax_counterexample(Universe(1));
    BasicReports r = check_basic(f, abc);
    CHECK(r.total.pass);
    CHECK_FALSE(r.commutative.pass);
    REQUIRE(r.commutative.witness);
    CHECK(r.commutative.witness->args == ws({"-", "0"}));
    CHECK_FALSE(r.single_valued.pass);
    CHECK(check_commutative(minmax_commutativize(f), abc).pass);

    MultiMap p = partial_counterexample(Universe(2));
    NamedWords n = partial_counterexample_words();
    std::vector<Word> d{n.a, n.b, n.c};
    PropertyReport t = check_total(p, d);
    CHECK_FALSE(t.pass);
    REQUIRE(t.witness);
    CHECK(t.witness->args == std::vector<Word>{n.a, n.b});
}

TEST_CASE("associativity examples") {
    auto abc = words_up_to(1);
    MultiMap f = minmax_counterexample(Universe(1));
    CHECK(is_associative_on(f, abc).pass);
    MultiMap fp = minmax_commutativize(f);
    PropertyReport r = is_associative_on(fp, abc);
    witness_reproduces_assoc(fp, r);
    // the printed triple (a, c, b)
    NamedWords n = minmax_counterexample_words();
    CHECK(oracle::apply(fp, {n.a}, oracle::values(fp, n.c, n.b)) == oracle::WSet{n.a, n.c});
    CHECK(oracle::apply(fp, oracle::values(fp, n.a, n.c), {n.b}) ==
          oracle::WSet{n.a, n.b, n.c});
    CHECK(is_associative_on(maxlex(Universe(3)), words_up_to(3)).pass);
    CHECK_THROWS_AS(is_associative_on(partial_counterexample(Universe(2)), words_up_to(2)),
                    PreconditionError);
}

TEST_CASE("weak and strong associativity") {
    MultiMap p = partial_counterexample(Universe(2));
    NamedWords n = partial_counterexample_words();
    std::vector<Word> d{n.a, n.b, n.c};
    CHECK(is_weakly_associative_on(p, d).pass);
    CHECK(is_strongly_associative_on(p, d).pass);
    MultiMap undefined = MultiMap::from_rule(
        Universe(2), [](const Word&, const Word&) { return ValueSet::none(); }, false, "none");
    CHECK(is_weakly_associative_on(undefined, words_up_to(2)).pass);
    // the f̂ of the partial function is neither strongly associative nor
    // rescued on the nose, but weak associativity forgives the ∅ side
    MultiMap hat = union_commutativize(p);
    CHECK_FALSE(is_strongly_associative_on(hat, d).pass);
    CHECK(is_weakly_associative_on(hat, d).pass);
}

TEST_CASE("weak equals plain associativity for total functions") {
    std::vector<Word> d = words_up_to(1);
    FunctionClass cls(d, ValueMode::Multi, false, true);
    for (std::uint64_t i = 0; i < cls.size(); ++i) {
        MultiMap f = cls.at(i);
        CHECK(is_weakly_associative_on(f, d).pass == is_associative_on(f, d).pass);
        CHECK(is_strongly_associative_on(f, d).pass == is_associative_on(f, d).pass);
    }
}

TEST_CASE("associativity checker agrees with the naive oracle and its witnesses re-check") {
    std::vector<Word> d = words_up_to(1);
    FunctionClass cls(d, ValueMode::Multi, false, true);
    for (std::uint64_t i = 0; i < cls.size(); ++i) {
        MultiMap f = cls.at(i);
        PropertyReport r = is_associative_on(f, d);
        CHECK(r.pass == oracle::associative(f, d));
        if (!r.pass) witness_reproduces_assoc(f, r);
    }
}

TEST_CASE("commutative total functions are associative on one- and two-element sets") {
    std::vector<Word> d = words_up_to(1);
    FunctionClass cls(d, ValueMode::Multi, true, true);
    for (std::uint64_t i = 0; i < cls.size(); ++i) {
        MultiMap f = cls.at(i);
        for (std::size_t a = 0; a < d.size(); ++a) {
            std::vector<Word> one{d[a]};
            CHECK(is_associative_on(f, one).pass);
            for (std::size_t b = a + 1; b < d.size(); ++b) {
                std::vector<Word> two{d[a], d[b]};
                CHECK(is_associative_on(f, two).pass);
            }
        }
    }
}

TEST_CASE("associativity at each length") {
    CHECK(is_associative_at_each_length(maxlex(Universe(4)), 4).summary.pass);
    LengthwiseReport r = is_associative_at_each_length(three_cycle_length2(), 2);
    CHECK_FALSE(r.summary.pass);
    REQUIRE(r.per_length.size() == 3);
    CHECK(r.per_length[0] == LengthVerdict::Associative);
    CHECK(r.per_length[1] == LengthVerdict::Associative);
    CHECK(r.per_length[2] == LengthVerdict::NotAssociative);
    CHECK_FALSE(oracle::associative(three_cycle_length2(), words_of_length(2)));

    LengthwiseReport p = is_associative_at_each_length(partial_counterexample(Universe(2)), 2);
    CHECK(p.per_length[2] == LengthVerdict::NotTotal);

    // score selectors built from arbitrary commutative selectors
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        TargetSet b = random_target_set(Universe(3), rng);
        MultiMap base = random_selector(b, ValueMode::Single, true, false, rng);
        CHECK(is_associative_at_each_length(score_selector(base, b), 3).summary.pass);
    }
}

TEST_CASE("selector checks") {
    Universe u(2);
    TargetSet up(u, ws({"10", "11"}));  // upward closed under shortlex
    CHECK(is_selector_for(maxlex(u), up, words_up_to(2)).pass);
    TargetSet only(u, ws({"00"}));
    PropertyReport r = is_selector_for(maxlex(u), only, words_up_to(2));
    CHECK_FALSE(r.pass);
    REQUIRE(r.witness);
    CHECK(r.witness->args == ws({"00", "01"}));
    REQUIRE(r.witness->values.size() == 1);
    CHECK(r.witness->values[0].second == WordSet{w("01")});
    CHECK(is_selector_for(partial_counterexample(u), TargetSet(u), words_up_to(2)).pass);
}

TEST_CASE("three conditions on triples") {
    auto abc = words_up_to(1);
    TripleConditionsReport r =
        triple_conditions_check(union_commutativize(minmax_counterexample(Universe(1))), abc);
    CHECK(r.report.pass);
    CHECK(r.cond_associative);
    CHECK(r.cond_all_triples);
    CHECK(r.cond_distinct_triples);

    MultiMap cyc = testutil::patched(maxlex(Universe(1)),
                                     {{"-", "0", "y"}, {"0", "1", "y"}, {"1", "-", "y"}}, true);
    TripleConditionsReport c = triple_conditions_check(cyc, abc);
    CHECK(c.report.pass);
    CHECK_FALSE(c.cond_associative);
    CHECK_FALSE(c.cond_all_triples);
    CHECK_FALSE(c.cond_distinct_triples);

    std::vector<Word> two = ws({"0", "1"});
    FunctionClass cls(two, ValueMode::Multi, true, true);
    for (std::uint64_t i = 0; i < cls.size(); ++i) {
        TripleConditionsReport t = triple_conditions_check(cls.at(i), two);
        CHECK(t.cond_associative);
        CHECK(t.cond_all_triples);
        CHECK(t.cond_distinct_triples);
    }
    CHECK_THROWS_AS(triple_conditions_check(minmax_counterexample(Universe(1)), abc),
                    PreconditionError);
}

TEST_CASE("three conditions never disagree on small classes") {
    for (unsigned k = 3; k <= 4; ++k) {
        std::vector<Word> d;
        for (unsigned i = 0; i < k; ++i) d.push_back(Word::from_rank(i));
        FunctionClass cls(d, ValueMode::Multi, true, true);
        for (std::uint64_t i = 0; i < cls.size(); ++i) {
            CHECK(triple_conditions_check(cls.at(i), d).report.pass);
        }
    }
}

TEST_CASE("associativity forces totality") {
    Universe u(2);
    TargetSet b(u, ws({"11"}));
    // prefer(B) with one undefined pair of non-members
    MultiMap f = testutil::patched(prefer(b), {{"00", "01", "none"}}, true);
    // The implication holds because the hole breaks associativity; the report
    // carries the triple that shows it.
    PropertyReport r = totality_consequence(f, b);
    CHECK(r.pass);
    REQUIRE(r.witness);
    REQUIRE(r.witness->args.size() == 3);
    CHECK(r.witness->args[0] == w("00"));
    CHECK(r.witness->args[1] == w("01"));
    CHECK(r.witness->args[2] == w("11"));
    // one side is {z}, the other ∅
    CHECK(r.witness->values[0].second.size() + r.witness->values[1].second.size() == 1);

    CHECK(totality_consequence(prefer(b), b).pass);
    CHECK_THROWS_AS(totality_consequence(prefer(b), TargetSet(u)), PreconditionError);

    // per length: the hole is at length 2 where B has a member
    PropertyReport at2 = totality_consequence_at_length(f, b, 2);
    CHECK(at2.pass);
    REQUIRE(at2.witness);
    CHECK_FALSE(oracle::associative(f, words_of_length(2)));
    PropertyReport at1 = totality_consequence_at_length(f, b, 1);  // B^{=1} = ∅
    CHECK(at1.pass);
    CHECK_FALSE(at1.witness);
}

TEST_CASE("class enumeration") {
    auto d = words_up_to(1);
    CHECK(enumerate_class(d, ValueMode::Single, true, true).size() == 8);
    FunctionClass multi = enumerate_class(d, ValueMode::Multi, true, true);
    CHECK(multi.size() == 27);
    std::size_t assoc_multi = 0, assoc_single = 0;
    for (std::uint64_t i = 0; i < multi.size(); ++i) assoc_multi += is_associative_on(multi.at(i), d).pass;
    FunctionClass single = enumerate_class(d, ValueMode::Single, true, true);
    for (std::uint64_t i = 0; i < single.size(); ++i)
        assoc_single += is_associative_on(single.at(i), d).pass;
    CHECK(assoc_multi == 13);
    CHECK(assoc_single == 6);

    // every member distinct
    std::set<std::vector<int>> seen;
    for (std::uint64_t i = 0; i < multi.size(); ++i) {
        std::vector<int> sig;
        for (const Word& x : d)
            for (const Word& y : d) sig.push_back(multi.at(i).eval(x, y).code());
        CHECK(seen.insert(sig).second);
    }
    CHECK(enumerate_class(d, ValueMode::Multi, false, true).size() == 729);
    CHECK(enumerate_class(d, ValueMode::Multi, false, false).size() == 4096 * 8);
    std::vector<Word> seven;
    for (unsigned i = 0; i < 7; ++i) seven.push_back(Word::from_rank(i));
    CHECK_THROWS_AS(FunctionClass(seven, ValueMode::Single, true, true), RangeError);
}

TEST_CASE("single-valued census cross-checked by cycle counting") {
    auto d = words_up_to(1);
    FunctionClass single = enumerate_class(d, ValueMode::Single, true, true);
    for (std::uint64_t i = 0; i < single.size(); ++i) {
        MultiMap f = single.at(i);
        // a 3-cycle: each word beats exactly one other
        int beats[3] = {0, 0, 0};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (a != b && f.eval(d[a], d[b]) == ValueSet::x()) ++beats[a];
        const bool cycle = beats[0] == 1 && beats[1] == 1 && beats[2] == 1;
        CHECK(is_associative_on(f, d).pass == !cycle);
    }
}

TEST_CASE("table guard") {
    CHECK_THROWS_AS(MultiMap::empty_table(Universe(10), true, "big"), RangeError);
    CHECK_NOTHROW(MultiMap::empty_table(Universe(9), true, "ok"));
}

}
