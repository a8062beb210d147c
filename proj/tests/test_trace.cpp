#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_support.hpp"
#include "untrs/parse.hpp"
#include "untrs/trace.hpp"

using namespace untrs;

namespace {

// A chain of constants: every normal form of {a->b, a->c, c->c, d->c, d->e}
// is reachable from a or d.
const char* kChain = "a -> b\na -> c\nd -> c\nd -> e\n";

ProofTrace chain_trace() {
    // b <- a -> c <- d -> e, all root steps with rule equations 0..3
    ProofTrace tr;
    tr.from = Term::constant("b");
    tr.to = Term::constant("e");
    tr.steps = {TraceStep{{}, 0, true, {}}, TraceStep{{}, 1, false, {}},
                TraceStep{{}, 2, true, {}}, TraceStep{{}, 3, false, {}}};
    tr.lowered = true;
    return tr;
}

}  // namespace

TEST_CASE("verify accepts a correct proof and rejects corruptions") {
    Trs R = parse_trs(kChain);
    EquationSet E = to_equations(R);
    ProofTrace tr = chain_trace();
    std::string why;
    CHECK(verify_trace(tr, E, &why));

    ProofTrace bad = tr;
    bad.steps[1].reversed = true;
    CHECK(!verify_trace(bad, E, &why));
    CHECK(!why.empty());

    bad = tr;
    bad.to = Term::constant("c");
    CHECK(!verify_trace(bad, E));

    bad = tr;
    bad.steps[2].pos = {0};  // no such position in a constant
    CHECK(!verify_trace(bad, E));
}

TEST_CASE("the lowered flag is enforced") {
    Trs R = parse_trs(kChain);
    EquationSet E = closure_of(R);
    // find a derived equation relating b and e
    int derived = -1;
    for (const Equation& eq : E.eqs)
        if (eq.origin != EqOrigin::FromRule &&
            canonical_eq_key(eq.lhs, eq.rhs) ==
                canonical_eq_key(Term::constant("b"), Term::constant("e")))
            derived = eq.id;
    REQUIRE(derived != -1);
    ProofTrace tr;
    tr.from = E.eqs[derived].lhs;
    tr.to = E.eqs[derived].rhs;
    tr.steps = {TraceStep{{}, derived, false, {}}};
    CHECK(verify_trace(tr, E));
    tr.lowered = true;  // claims rule steps only, but uses a derived one
    CHECK(!verify_trace(tr, E));
}

TEST_CASE("lowering expands derived steps into rule steps") {
    Trs R = parse_trs(kChain);
    EquationSet E = closure_of(R);
    for (const Equation& eq : E.eqs) {
        ProofTrace tr;
        tr.from = eq.lhs;
        tr.to = eq.rhs;
        tr.steps = {TraceStep{{}, eq.id, false, {}}};
        ProofTrace low = lower_trace(tr, E);
        CHECK(low.lowered);
        CHECK(verify_trace(low, E));
        for (const TraceStep& st : low.steps)
            CHECK(E.eqs[st.eq].origin == EqOrigin::FromRule);
    }
}

TEST_CASE("lowering rejects invalid input") {
    Trs R = parse_trs(kChain);
    EquationSet E = to_equations(R);
    ProofTrace bad = chain_trace();
    bad.steps[0].reversed = false;
    CHECK_THROWS_AS(lower_trace(bad, E), Error);
}

TEST_CASE("json round-trip") {
    Trs R = parse_trs("vars x\nf(x,x) -> g(a,x)\n");
    EquationSet E = to_equations(R);
    ProofTrace tr;
    tr.from = Term::app("f", {Term::constant("b"), Term::constant("b")});
    tr.to = Term::app("g", {Term::constant("a"), Term::constant("b")});
    tr.steps = {TraceStep{{}, 0, false, Subst{{"x", Term::constant("b")}}}};
    tr.lowered = true;
    REQUIRE(verify_trace(tr, E));

    nlohmann::json j = trace_to_json(tr);
    ProofTrace back = trace_from_json(
        j, [&](const std::string& s) { return parse_term(s, R); });
    CHECK(back.from == tr.from);
    CHECK(back.to == tr.to);
    CHECK(back.lowered == tr.lowered);
    REQUIRE(back.steps.size() == 1);
    CHECK(back.steps[0].pos == tr.steps[0].pos);
    CHECK(back.steps[0].subst == tr.steps[0].subst);
    CHECK(verify_trace(back, E));
}

TEST_CASE("lowering a positional step keeps the position") {
    Trs R = parse_trs("vars x\na -> b\nb -> c\n");
    EquationSet E = closure_of(R);
    int ac = -1;
    for (const Equation& eq : E.eqs)
        if (canonical_eq_key(eq.lhs, eq.rhs) ==
            canonical_eq_key(Term::constant("a"), Term::constant("c")))
            ac = eq.id;
    REQUIRE(ac != -1);
    Term from = Term::app("g", {E.eqs[ac].lhs});
    Term to = Term::app("g", {E.eqs[ac].rhs});
    ProofTrace tr;
    tr.from = from;
    tr.to = to;
    tr.steps = {TraceStep{{0}, ac, false, {}}};
    ProofTrace low = lower_trace(tr, E);
    CHECK(verify_trace(low, E));
    REQUIRE(low.steps.size() == 2);
    for (const TraceStep& st : low.steps) CHECK(st.pos == Position{0});
}
