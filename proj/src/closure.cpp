#include "untrs/closure.hpp"

#include <deque>
#include <set>

namespace untrs {

EquationSet to_equations(const Trs& R) {
    EquationSet E;
    for (const Rule& r : R.rules) {
        if (r.lhs == r.rhs) continue;
        Equation eq;
        eq.id = static_cast<int>(E.eqs.size());
        eq.lhs = r.lhs;
        eq.rhs = r.rhs;
        eq.origin = EqOrigin::FromRule;
        eq.rule_id = r.id;
        E.eqs.push_back(std::move(eq));
    }
    return E;
}

std::pair<Term, Term> canonical_eq_key(const Term& lhs, const Term& rhs) {
    auto a = canonical_rename(lhs, rhs);
    auto b = canonical_rename(rhs, lhs);
    return std::min(a, b);
}

namespace {

Term rename_vars(const Term& t, const Subst& ren) {
    if (t.is_var()) {
        auto it = ren.find(t.name());
        return it == ren.end() ? t : it->second;
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(rename_vars(a, ren));
    return Term::app(t.name(), std::move(args));
}

// Renames B's variables apart from A's by priming.
std::pair<Term, Term> rename_apart(const Term& bl, const Term& br,
                                   const std::set<std::string>& avoid) {
    Subst ren;
    std::set<std::string> own = vars_of(bl);
    collect_vars(br, own);
    for (const std::string& x : own) {
        if (!avoid.count(x)) continue;
        std::string fresh = x;
        do fresh += "'";
        while (avoid.count(fresh) || own.count(fresh));
        ren[x] = Term::var(fresh);
    }
    if (ren.empty()) return {bl, br};
    return {rename_vars(bl, ren), rename_vars(br, ren)};
}

struct Saturator {
    std::vector<Equation> eqs;
    std::set<std::pair<Term, Term>> seen;
    std::deque<std::size_t> work;
    std::size_t cap;

    void add(Equation eq) {
        if (eq.lhs == eq.rhs) return;
        auto key = canonical_eq_key(eq.lhs, eq.rhs);
        if (!seen.insert(key).second) return;
        if (eqs.size() >= cap)
            throw Error("cap-exceeded", "equation closure exceeded cap of " +
                                            std::to_string(cap));
        eq.id = static_cast<int>(eqs.size());
        work.push_back(eqs.size());
        eqs.push_back(std::move(eq));
    }

    // All inferences with premise 1 taken from eqs[i], premise 2 from eqs[j].
    void combine(std::size_t i, std::size_t j) {
        const std::set<std::string> avoid = [&] {
            std::set<std::string> v = vars_of(eqs[i].lhs);
            collect_vars(eqs[i].rhs, v);
            return v;
        }();
        auto [bl, br] = rename_apart(eqs[j].lhs, eqs[j].rhs, avoid);
        const Term sides1[2][2] = {{eqs[i].lhs, eqs[i].rhs},
                                   {eqs[i].rhs, eqs[i].lhs}};
        const Term sides2[2][2] = {{bl, br}, {br, bl}};
        for (const auto& s1 : sides1) {
            const Term& g = s1[0];
            const Term& d = s1[1];
            for (const auto& s2 : sides2) {
                const Term& l = s2[0];
                const Term& r = s2[1];
                infer1(g, d, l, r, i, j);
                infer2(g, d, l, r, i, j);
                infer3(g, d, l, r, i, j);
            }
        }
    }

    void infer1(const Term& g, const Term& d, const Term& l, const Term& r,
                std::size_t i, std::size_t j) {
        if (g.is_var() || l.is_var()) return;
        if (g.is_const() && l.is_const()) return;
        auto sigma = unify(l, g);
        if (!sigma) return;
        Equation eq;
        eq.lhs = apply_subst(d, *sigma);
        eq.rhs = apply_subst(r, *sigma);
        eq.origin = EqOrigin::Infer1;
        eq.p1 = static_cast<int>(i);
        eq.p2 = static_cast<int>(j);
        eq.mid = apply_subst(g, *sigma);
        add(std::move(eq));
    }

    void infer2(const Term& x, const Term& d, const Term& y, const Term& r,
                std::size_t i, std::size_t j) {
        if (!y.is_var()) return;
        if (!x.is_var() && !x.is_const()) return;
        Equation eq;
        eq.lhs = d;
        eq.rhs = apply_subst(r, Subst{{y.name(), x}});
        eq.origin = EqOrigin::Infer2;
        eq.p1 = static_cast<int>(i);
        eq.p2 = static_cast<int>(j);
        eq.mid = x;
        add(std::move(eq));
    }

    void infer3(const Term& g, const Term& d, const Term& a, const Term& b,
                std::size_t i, std::size_t j) {
        if (!a.is_const() || !b.is_const()) return;
        for (const Position& p : positions_of(g)) {
            if (!(subterm_at(g, p) == a)) continue;
            Equation eq;
            eq.lhs = replace_at(g, p, b);
            eq.rhs = d;
            eq.origin = EqOrigin::Infer3;
            eq.p1 = static_cast<int>(i);
            eq.p2 = static_cast<int>(j);
            eq.mid = g;
            eq.occ = p;
            add(std::move(eq));
        }
    }
};

}  // namespace

EquationSet saturate(const EquationSet& E, std::size_t cap) {
    for (const Equation& eq : E.eqs)
        if (!is_flat(eq.lhs) || !is_flat(eq.rhs))
            throw Error("not-flat", "closure requires flat equations");

    Saturator s;
    s.cap = cap;
    for (const Equation& eq : E.eqs) s.add(eq);
    while (!s.work.empty()) {
        std::size_t i = s.work.front();
        s.work.pop_front();
        std::size_t n = s.eqs.size();
        for (std::size_t j = 0; j < n; ++j) {
            s.combine(i, j);
            if (i != j) s.combine(j, i);
        }
    }
    return EquationSet{std::move(s.eqs)};
}

EquationSet closure_of(const Trs& R, std::size_t cap) {
    return saturate(to_equations(R), cap);
}

}  // namespace untrs
