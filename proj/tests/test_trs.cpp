#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_support.hpp"
#include "untrs/parse.hpp"
#include "untrs/trs.hpp"

using namespace untrs;

namespace {
Trs parse(const std::string& text) { return parse_trs(text); }
}  // namespace

TEST_CASE("flat and shallow classification") {
    Trs R = parse("vars x\nf(x,a) -> x\nb -> f(a,b)\n");
    CHECK(R.flat());
    CHECK(R.shallow());
    Trs S = parse("vars x\nf(g(a),x) -> x\n");
    CHECK(!S.flat());
    CHECK(S.shallow());
    Trs D = parse("vars x\nf(g(x)) -> x\n");
    CHECK(!D.shallow());
}

TEST_CASE("rule constants and signature constants") {
    Trs R = parse("sig d/0\nvars x\nf(x,a) -> b\nc -> c\n");
    CHECK(R.rule_constants() == std::set<std::string>{"a", "b", "c"});
    // d is declared but unused; still part of the signature
    auto sc = R.signature_constants();
    CHECK(sc.size() == 4);
}

TEST_CASE("rule_applies_at_root agrees with match_term") {
    testing::Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        Trs R = testing::random_flat_trs(rng);
        testing::Corpus c;
        for (int j = 0; j < 30; ++j) {
            Term t = testing::random_ground_term(rng, c, 2);
            for (const Rule& r : R.rules)
                CHECK(rule_applies_at_root(r, t) ==
                      match_term(r.lhs, t).has_value());
        }
    }
}

TEST_CASE("one-step successors, forward") {
    Trs R = parse("vars x\na -> b\nf(x,x) -> x\n");
    Term t = Term::app("f", {Term::constant("a"), Term::constant("a")});
    auto succ = one_step_successors(t, R, Direction::forward);
    // f(a,a) -> a at the root, f(b,a), f(a,b)
    std::set<Term> results;
    for (auto& [u, st] : succ) results.insert(u);
    CHECK(results == std::set<Term>{
                         Term::constant("a"),
                         Term::app("f", {Term::constant("b"), Term::constant("a")}),
                         Term::app("f", {Term::constant("a"), Term::constant("b")})});
}

TEST_CASE("one-step successors, symmetric with pool") {
    Trs R = parse("vars x\nf(x,x) -> a\n");
    Term t = Term::constant("a");
    std::vector<Term> pool = {Term::constant("a"), Term::constant("b")};
    auto succ = one_step_successors(t, R, Direction::symmetric, pool);
    std::set<Term> results;
    for (auto& [u, st] : succ) results.insert(u);
    CHECK(results == std::set<Term>{
                         Term::app("f", {Term::constant("a"), Term::constant("a")}),
                         Term::app("f", {Term::constant("b"), Term::constant("b")})});
}

TEST_CASE("normal forms") {
    Trs R = parse("vars x\na -> b\nf(x,x) -> x\n");
    CHECK(!is_normal_form(Term::constant("a"), R));
    CHECK(is_normal_form(Term::constant("b"), R));
    CHECK(!is_normal_form(
        Term::app("g", {Term::constant("a")}), R));  // redex below the root
    CHECK(is_normal_form(
        Term::app("f", {Term::constant("b"), Term::constant("c")}), R));
}

TEST_CASE("signature extension adds 3*alpha fresh constants") {
    // alpha = 1
    Trs R1 = parse("vars x\ng(x) -> x\n");
    Trs E1 = extend_signature(R1);
    CHECK(E1.signature.size() == R1.signature.size() + 3);
    // alpha = 2
    Trs R2 = parse("vars x\nf(x,a) -> x\n");
    CHECK(extend_signature(R2).signature.size() == R2.signature.size() + 6);
    // no function symbols in the rules: alpha defaults to 1
    Trs R3 = parse("a -> b\n");
    CHECK(extend_signature(R3).signature.size() == R3.signature.size() + 3);
    // fresh constants are normal forms of the extended system
    for (const auto& [name, ar] : E1.signature)
        if (ar == 0 && !R1.signature.count(name))
            CHECK(is_normal_form(Term::constant(name), E1));
}

TEST_CASE("normal form enumeration on a small system") {
    Trs R = parse("sig c/0\nvars x\na -> b\nf(x,x) -> x\n");
    auto nfs = enumerate_normal_forms(R, 1, 1000);
    // height 0: b, c; height 1: f over {b,c} minus f(t,t)
    std::set<Term> got(nfs.begin(), nfs.end());
    std::set<Term> want = {
        Term::constant("b"), Term::constant("c"),
        Term::app("f", {Term::constant("b"), Term::constant("c")}),
        Term::app("f", {Term::constant("c"), Term::constant("b")})};
    CHECK(got == want);
    CHECK_THROWS_AS(enumerate_normal_forms(R, 3, 5), Error);
}
