#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_support.hpp"
#include "untrs/term.hpp"

using namespace untrs;

namespace {
Term T(const char* f, std::vector<Term> args) { return Term::app(f, std::move(args)); }
Term x = Term::var("x");
Term y = Term::var("y");
Term a = Term::constant("a");
Term b = Term::constant("b");
}  // namespace

TEST_CASE("size, height, classification") {
    Term t = T("f", {T("g", {a}), x});
    CHECK(term_size(t) == 4);
    CHECK(term_height(t) == 2);
    CHECK(term_height(a) == 0);
    CHECK(term_size(x) == 1);
    CHECK(!is_ground(t));
    CHECK(is_ground(T("g", {a})));
    CHECK(is_flat(T("f", {x, a})));
    CHECK(!is_flat(t));
    CHECK(is_shallow(t));                           // g(a) is ground
    CHECK(!is_shallow(T("f", {T("g", {x}), a})));   // x at depth 2
}

TEST_CASE("positions and subterm access") {
    Term t = T("f", {T("g", {a}), b});
    auto ps = positions_of(t);
    // pre-order: root, 0, 0.0, 1
    REQUIRE(ps.size() == 4);
    CHECK(ps[0] == Position{});
    CHECK(ps[1] == Position{0});
    CHECK(ps[2] == Position{0, 0});
    CHECK(ps[3] == Position{1});
    CHECK(subterm_at(t, {0, 0}) == a);
    CHECK(replace_at(t, {0, 0}, b) == T("f", {T("g", {b}), b}));
    // replace/subterm round-trip at every position
    for (const auto& p : ps)
        CHECK(replace_at(t, p, subterm_at(t, p)) == t);
}

TEST_CASE("matching") {
    Term pat = T("f", {x, x});
    CHECK(!match_term(pat, T("f", {a, b})));
    auto s = match_term(pat, T("f", {T("g", {a}), T("g", {a})}));
    REQUIRE(s);
    CHECK(s->at("x") == T("g", {a}));
    CHECK(apply_subst(pat, *s) == T("f", {T("g", {a}), T("g", {a})}));
    // a variable matches anything; a constant only itself
    CHECK(match_term(x, T("f", {a, b})));
    CHECK(!match_term(a, b));
}

TEST_CASE("unification") {
    auto s = unify(T("f", {x, a}), T("f", {b, y}));
    REQUIRE(s);
    CHECK(apply_subst(T("f", {x, a}), *s) == apply_subst(T("f", {b, y}), *s));
    CHECK(!unify(T("f", {x, x}), T("f", {a, b})));
    // occurs check
    CHECK(!unify(x, T("g", {x})));
    // mgu of x against a term
    auto s2 = unify(x, T("g", {y}));
    REQUIRE(s2);
    CHECK(s2->at("x") == T("g", {y}));
}

TEST_CASE("canonical renaming") {
    Term t1 = T("f", {Term::var("u"), Term::var("v"), Term::var("u")});
    Term t2 = T("f", {Term::var("p"), Term::var("q"), Term::var("p")});
    CHECK(canonical_rename(t1) == canonical_rename(t2));
    Term t3 = T("f", {Term::var("p"), Term::var("q"), Term::var("q")});
    CHECK(canonical_rename(t1) != canonical_rename(t3));
    // joint renaming keeps sharing across the pair
    auto [l1, r1] = canonical_rename(T("g", {x}), T("g", {x}));
    CHECK(l1 == r1);
    auto [l2, r2] = canonical_rename(T("g", {x}), T("g", {y}));
    CHECK(l2 != r2);
}

TEST_CASE("printing") {
    CHECK(to_string(T("f", {a, T("g", {x})})) == "f(a,g(x))");
    CHECK(to_string(a) == "a");
    CHECK(to_string(Position{0, 1}) == "[0.1]");
}

TEST_CASE("matching is stable under random substitutions") {
    testing::Rng rng(20260826);
    testing::Corpus c;
    for (int i = 0; i < 200; ++i) {
        Term pat = testing::random_flat_term(rng, c, true);
        Subst s;
        for (const std::string& v : vars_of(pat))
            s[v] = testing::random_ground_term(rng, c, 2);
        Term inst = apply_subst(pat, s);
        auto m = match_term(pat, inst);
        REQUIRE(m);
        CHECK(apply_subst(pat, *m) == inst);
        auto u = unify(pat, inst);
        CHECK(u);
    }
}
