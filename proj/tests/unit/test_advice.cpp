#include <doctest.h>

#include "assocsel/advice.hpp"
#include "assocsel/errors.hpp"
#include "assocsel/generators.hpp"
#include "assocsel/transforms.hpp"
#include "build.hpp"

using namespace assocsel;
using testutil::w;
using testutil::ws;

namespace {

AdvicePackage pkg(unsigned n, AdviceKind k, const char* advice) {
    return AdvicePackage{n, k, w(advice), "test"};
}

void check_suffix_claims(const AdvicePackage& p, const TargetSet& b) {
    CHECK(p.advice.length() == p.n + 1);
    if (p.kind == AdviceKind::Strong || !p.advice.bit(0)) return;
    if (p.kind == AdviceKind::CoNP && p.n == 0) return;  // "1" means B^{=0} = Σ^0
    Word named = p.advice.suffix_from(1);
    if (p.kind == AdviceKind::CoNP) {
        CHECK_FALSE(b.contains(named));
    } else {
        CHECK(b.contains(named));
    }
}

} // namespace

TEST_SUITE("advice") {

TEST_CASE("source advice examples") {
    Universe u(3);
    TargetSet b(u, ws({"01", "10", "11"}));
    AdvicePackage p = extract_source_advice(maxlex(u), b, 2, false);
    CHECK(p.advice == w("101"));
    CHECK(p.kind == AdviceKind::P);
    CHECK(extract_source_advice(maxlex(u), b, 3, false).advice == w("0000"));

    // maxlex itself is no selector for s across lengths; prefer(s) agrees
    // with it on the members.
    TargetSet s(u, ws({"1", "01", "10", "11"}));
    AdvicePackage strong = extract_source_advice(prefer(s), s, 2, true);
    // names the word 1, whose shortlex rank is 2
    CHECK(strong.advice == w("011"));
    CHECK(Word::from_rank(strong.advice.bits() - 1) == w("1"));
    CHECK(extract_source_advice(maxlex(u), TargetSet(u), 2, true).advice == w("000"));
    CHECK_THROWS_AS(extract_source_advice(maxlex(u), s, 2, true), PreconditionError);
}

TEST_CASE("clique advice examples") {
    Universe u(1);
    MultiMap f = testutil::patched(union_commutativize(maxlex(u)), {{"0", "1", "xy"}}, true);
    TargetSet b(u, ws({"0", "1"}));
    CHECK(extract_clique_advice(f, b, 1, AdviceKind::NP).advice == w("10"));

    Universe u2(2);
    TargetSet full(u2, words_of_length(2));
    CHECK(extract_clique_advice(maxlex(u2), full, 2, AdviceKind::CoNP).advice == w("011"));
    TargetSet three(u2, ws({"01", "10", "11"}));
    CHECK(extract_clique_advice(maxlex(u2), three, 2, AdviceKind::CoNP).advice == w("100"));
    CHECK(extract_clique_advice(maxlex(u2), TargetSet(u2), 2, AdviceKind::CoNP).advice ==
          w("000"));
    CHECK(extract_clique_advice(maxlex(u2), TargetSet(u2), 2, AdviceKind::NP).advice == w("000"));
}

TEST_CASE("decoding examples") {
    MultiMap m = maxlex(Universe(2));
    CHECK(decode(pkg(2, AdviceKind::P, "101"), w("10"), m));
    CHECK_FALSE(decode(pkg(2, AdviceKind::P, "101"), w("00"), m));
    CHECK(decode(pkg(2, AdviceKind::P, "101"), w("01"), m));
    CHECK_FALSE(decode(pkg(2, AdviceKind::CoNP, "100"), w("00"), m));
    CHECK(decode(pkg(2, AdviceKind::CoNP, "100"), w("01"), m));
    CHECK(decode(pkg(2, AdviceKind::CoNP, "011"), w("00"), m));
    CHECK_FALSE(decode(pkg(2, AdviceKind::CoNP, "000"), w("00"), m));
    CHECK_FALSE(decode(pkg(2, AdviceKind::P, "000"), w("11"), m));
    CHECK_FALSE(decode(pkg(2, AdviceKind::NP, "000"), w("11"), m));

    CHECK_THROWS_AS(decode(pkg(2, AdviceKind::P, "101"), w("1"), m), PreconditionError);
    CHECK_THROWS_AS(decode(pkg(2, AdviceKind::P, "10"), w("11"), m), FormatError);
    CHECK(decode(pkg(2, AdviceKind::Strong, "011"), w("1"), m));
    CHECK_THROWS_AS(decode(pkg(2, AdviceKind::Strong, "011"), w("111"), m), PreconditionError);
}

TEST_CASE("advice kinds parse") {
    CHECK(parse_advice_kind("p") == AdviceKind::P);
    CHECK(parse_advice_kind("np") == AdviceKind::NP);
    CHECK(parse_advice_kind("conp") == AdviceKind::CoNP);
    CHECK(parse_advice_kind("strong") == AdviceKind::Strong);
    CHECK_THROWS_AS(parse_advice_kind("x"), ConfigError);
}

TEST_CASE("extraction checks its preconditions") {
    Universe u(2);
    TargetSet b(u, ws({"00"}));
    CHECK_THROWS_AS(extract_source_advice(maxlex(u), b, 2, false), PreconditionError);
    MultiMap cyc = testutil::patched(maxlex(u),
                                     {{"00", "01", "y"}, {"01", "10", "y"}, {"10", "00", "y"}}, true);
    TargetSet cb(u, ws({"00", "01", "10"}));
    CHECK_THROWS_AS(extract_source_advice(cyc, cb, 2, false), PreconditionError);
    CHECK_THROWS_AS(extract_clique_advice(cyc, cb, 2, AdviceKind::NP), PreconditionError);
}

TEST_CASE("round trips for score selectors at maxLen 6") {
    Rng rng(6);
    Universe u(6);
    for (int i = 0; i < 4; ++i) {
        TargetSet b = random_target_set(u, rng, 0.3);
        MultiMap f = maybe_tabulated(score_selector(prefer(b), b), 200);
        for (AdviceKind k : {AdviceKind::P, AdviceKind::NP, AdviceKind::CoNP, AdviceKind::Strong}) {
            RoundtripResult r = verify_roundtrip(f, b, 6, k);
            CHECK(r.report.pass);
            for (const auto& p : r.packages) check_suffix_claims(p, b);
        }
    }
}

TEST_CASE("strong round trip for etime selectors") {
    Rng rng(12);
    for (int i = 0; i < 10; ++i) {
        Universe u(4);
        TargetSet b = random_target_set(u, rng);
        MultiMap base = random_selector(b, ValueMode::Single, true, false, rng);
        MultiMap f = maybe_tabulated(etime_selector(b, maybe_tabulated(base), 4).selector);
        RoundtripResult r = verify_roundtrip(f, b, 4, AdviceKind::Strong);
        CHECK(r.report.pass);
        for (bool ok : r.length_ok) CHECK(ok);
    }
}

TEST_CASE("clique round trips for union-commutativized associative selectors") {
    Rng rng(13);
    Universe u(3);
    for (int i = 0; i < 25; ++i) {
        TargetSet b = random_target_set(u, rng);
        MultiMap f = random_associative(u, ValueMode::Multi, false, rng, &b);
        MultiMap hat = maybe_tabulated(union_commutativize(f));
        for (AdviceKind k : {AdviceKind::NP, AdviceKind::CoNP}) {
            RoundtripResult r = verify_roundtrip(hat, b, 3, k);
            CHECK(r.report.pass);
            for (const auto& p : r.packages) check_suffix_claims(p, b);
        }
    }
}

TEST_CASE("decoder members") {
    Universe u(2);
    TargetSet b(u, ws({"01", "10", "11"}));
    AdvicePackage p = extract_source_advice(maxlex(u), b, 2, false);
    auto members = decoder_members(p, maxlex(u), 10);
    REQUIRE(members.size() == 3);
    for (const PairCode& c : members) {
        auto [x, a] = decode_pair(c);
        CHECK(b.contains(x));
        CHECK(a == p.advice);
    }
    CHECK(decoder_members(p, maxlex(u), 1).size() == 1);
}

}
