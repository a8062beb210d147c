#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_support.hpp"
#include "untrs/closure.hpp"
#include "untrs/parse.hpp"

using namespace untrs;

namespace {

std::set<std::pair<Term, Term>> keys(const EquationSet& E) {
    std::set<std::pair<Term, Term>> out;
    for (const Equation& eq : E.eqs) out.insert(canonical_eq_key(eq.lhs, eq.rhs));
    return out;
}

}  // namespace

TEST_CASE("to_equations drops trivial rules and keeps provenance") {
    Trs R = parse_trs("vars x\na -> b\ng(x) -> g(x)\nb -> a\n");
    EquationSet E = to_equations(R);
    REQUIRE(E.eqs.size() == 2);
    CHECK(E.eqs[0].origin == EqOrigin::FromRule);
    CHECK(E.eqs[0].rule_id == 0);
    CHECK(E.eqs[1].rule_id == 2);
}

TEST_CASE("saturation requires a flat system") {
    Trs R = parse_trs("vars x\nf(g(a),x) -> x\n");
    CHECK_THROWS_AS(closure_of(R), Error);
}

TEST_CASE("saturation is idempotent and preserves flatness") {
    testing::Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        Trs R = testing::random_flat_trs(rng);
        EquationSet E = closure_of(R, 20000);
        for (const Equation& eq : E.eqs) {
            CHECK(is_flat(eq.lhs));
            CHECK(is_flat(eq.rhs));
        }
        EquationSet E2 = saturate(E, 20000);
        CHECK(keys(E) == keys(E2));
    }
}

TEST_CASE("constant propagation through instance and replacement") {
    // a = b and f(x,b) = c force f(x,a) = c; b = x forces everything
    Trs R = parse_trs("vars x\na -> b\nf(x,b) -> c\n");
    EquationSet E = closure_of(R);
    auto k = keys(E);
    Term fxa = Term::app("f", {Term::var("x"), Term::constant("a")});
    CHECK(k.count(canonical_eq_key(fxa, Term::constant("c"))));
}

TEST_CASE("variable equations subsume constants") {
    Trs R = parse_trs("vars x\nb -> x\n");
    EquationSet E = closure_of(R);
    // the instance rule turns b = x into b = c for every rule constant;
    // here b is the only one, so only the original equation survives
    CHECK(E.eqs.size() == 1);
}

TEST_CASE("root paramodulation") {
    // f(x,x) = c and f(x,x) = g(a,x) meet at the root: c = g(a,x)
    Trs R = parse_trs("vars x\nf(x,x) -> c\nf(x,x) -> g(a,x)\n");
    EquationSet E = closure_of(R);
    Term gax = Term::app("g", {Term::constant("a"), Term::var("x")});
    CHECK(keys(E).count(canonical_eq_key(Term::constant("c"), gax)));
}

TEST_CASE("closure cap") {
    Trs R = parse_trs(
        "vars x y\nf(x,y) -> x\nf(x,y) -> y\nf(x,y) -> f(y,x)\n"
        "a -> f(a,b)\nb -> f(b,a)\n");
    CHECK_THROWS_AS(closure_of(R, 10), Error);
}

TEST_CASE("canonical keys identify renamed equations") {
    Term l1 = Term::app("f", {Term::var("u"), Term::var("v")});
    Term r1 = Term::var("u");
    Term l2 = Term::app("f", {Term::var("p"), Term::var("q")});
    Term r2 = Term::var("p");
    CHECK(canonical_eq_key(l1, r1) == canonical_eq_key(l2, r2));
    CHECK(canonical_eq_key(l1, r1) == canonical_eq_key(r2, l2));  // symmetric
    Term r3 = Term::var("q");
    CHECK(canonical_eq_key(l1, r1) != canonical_eq_key(l2, r3));
}
