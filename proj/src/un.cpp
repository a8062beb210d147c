#include "untrs/un.hpp"

#include <algorithm>
#include <sstream>

namespace untrs {

namespace {

// First ground subterm of height exactly 1 at depth >= min_depth,
// pre-order. Height-1 subterms are innermost among the offenders.
std::optional<Position> find_abbrev_target(const Term& t, std::size_t min_depth) {
    for (const Position& p : positions_of(t)) {
        if (p.size() < min_depth) continue;
        const Term& sub = subterm_at(t, p);
        if (term_height(sub) == 1 && is_ground(sub)) return p;
    }
    return std::nullopt;
}

Term replace_all(const Term& t, const Term& what, const Term& with) {
    if (t == what) return with;
    if (t.is_var() || t.args().empty()) return t;
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(replace_all(a, what, with));
    return Term::app(t.name(), std::move(args));
}

Term replace_below_root(const Term& t, const Term& what, const Term& with) {
    if (t.is_var() || t.args().empty()) return t;
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(replace_all(a, what, with));
    return Term::app(t.name(), std::move(args));
}

}  // namespace

Term unabbreviate(const Term& t, const std::map<std::string, Term>& table) {
    if (t.is_const()) {
        auto it = table.find(t.name());
        if (it != table.end()) return it->second;
    }
    if (t.is_var() || t.args().empty()) return t;
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(unabbreviate(a, table));
    return Term::app(t.name(), args);
}

FlatteningResult flatten(const Trs& R) {
    if (!R.shallow()) throw Error("not-shallow", "flatten requires a shallow TRS");
    FlatteningResult fr;
    fr.origin = R;
    if (R.flat()) {
        fr.flat_system = R;
        return fr;
    }

    std::vector<Rule> originals = R.rules;
    std::vector<Rule> defs;
    std::map<Term, std::string> memo;  // abbreviated form -> constant
    std::set<std::string> taken = R.declared_vars;
    for (const auto& [name, arity] : R.signature) taken.insert(name);
    int next_id = 1;

    for (;;) {
        const Term* target = nullptr;
        for (const Rule& r : originals) {
            if (auto p = find_abbrev_target(r.lhs, 1)) {
                target = &subterm_at(r.lhs, *p);
                break;
            }
            if (auto p = find_abbrev_target(r.rhs, is_flat(r.rhs) ? 1 : 0)) {
                target = &subterm_at(r.rhs, *p);
                break;
            }
        }
        if (!target) break;
        Term t = *target;

        std::string cname;
        if (auto it = memo.find(t); it != memo.end()) {
            cname = it->second;
        } else {
            do cname = "c" + std::to_string(next_id++);
            while (taken.count(cname));
            taken.insert(cname);
            memo[t] = cname;
            defs.push_back(Rule{-1, t, Term::constant(cname)});
            fr.constant_table[cname] = unabbreviate(t, fr.constant_table);
        }
        Term c = Term::constant(cname);
        for (Rule& r : originals) {
            r.lhs = replace_below_root(r.lhs, t, c);
            r.rhs = replace_all(r.rhs, t, c);
        }
        for (Rule& r : defs) r.rhs = replace_all(r.rhs, t, c);
    }

    fr.flat_system.declared_vars = R.declared_vars;
    fr.flat_system.signature = R.signature;
    for (const auto& [t, cname] : memo) fr.flat_system.signature[cname] = 0;
    int id = 0;
    for (Rule& r : defs) {
        r.id = id++;
        fr.flat_system.rules.push_back(r);
    }
    for (Rule& r : originals) {
        r.id = id++;
        fr.flat_system.rules.push_back(r);
    }
    return fr;
}

namespace {

// Conservative necessary condition for equivalence of two distinct terms:
// their root symbols must be connected through the equations' root
// symbols. An equation with a variable side disables the filter.
struct RootFilter {
    std::map<std::string, std::string> parent;
    bool wild = false;

    std::string find(const std::string& x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        if (it->second == x) return x;
        return it->second = find(it->second);
    }

    explicit RootFilter(const EquationSet& E) {
        for (const Equation& eq : E.eqs) {
            if (eq.lhs.is_var() || eq.rhs.is_var()) {
                wild = true;
                return;
            }
            std::string a = find(eq.lhs.name());
            std::string b = find(eq.rhs.name());
            parent[a] = b;
        }
    }

    bool may_connect(const Term& u, const Term& v) {
        if (wild) return true;
        if (u.name() == v.name()) return true;
        if (!parent.count(u.name()) || !parent.count(v.name())) return false;
        return find(u.name()) == find(v.name());
    }
};

bool reducible_at_root(const Term& t, const Trs& R) {
    for (const Rule& r : R.rules)
        if (match_term(r.lhs, t)) return true;
    return false;
}

struct NfStream {
    const Trs& F;
    std::size_t k;
    std::size_t nf_cap;
    std::size_t total = 0;
    std::vector<std::vector<Term>> by_size{{}};  // index 0 unused

    void ensure(std::size_t s) {
        while (by_size.size() <= s) gen(by_size.size());
    }

    void keep(std::vector<Term>& g, Term t) {
        if (++total > nf_cap)
            throw Error("cap-exceeded",
                        "normal form enumeration exceeded cap of " +
                            std::to_string(nf_cap) + " while deciding UN=");
        g.push_back(std::move(t));
    }

    void gen(std::size_t s) {
        std::vector<Term> g;
        if (s == 1) {
            for (const Term& c : F.signature_constants())
                if (!reducible_at_root(c, F)) keep(g, c);
        } else {
            for (const auto& [name, m] : F.signature) {
                if (m == 0 || s - 1 < m) continue;
                std::vector<Term> args;
                compose(name, m, s - 1, args, g);
            }
        }
        std::sort(g.begin(), g.end());
        by_size.push_back(std::move(g));
    }

    void compose(const std::string& name, std::size_t m, std::size_t budget,
                 std::vector<Term>& args, std::vector<Term>& g) {
        if (args.size() == m) {
            if (budget != 0) return;
            Term cand = Term::app(name, args);
            if (!reducible_at_root(cand, F)) keep(g, std::move(cand));
            return;
        }
        std::size_t remaining = m - args.size() - 1;
        for (std::size_t sz = 1; sz + remaining <= budget; ++sz) {
            if (sz >= by_size.size()) break;  // generated in size order
            for (const Term& a : by_size[sz]) {
                if (term_height(a) > k - 1) continue;
                args.push_back(a);
                compose(name, m, budget - sz, args, g);
                args.pop_back();
            }
        }
    }
};

}  // namespace

UnVerdict decide_un(const Trs& R, const DecideUnLimits& limits) {
    if (!R.shallow()) throw Error("not-shallow", "decide_un requires a shallow TRS");
    FlatteningResult fr = flatten(R);
    Trs F = extend_signature(fr.flat_system);

    UnVerdict v;
    v.analyzed = F;
    v.bound_k = std::max<std::size_t>(1, fr.flat_system.rule_constants().size());
    EquationSet Ehat = closure_of(F, limits.closure_cap);
    RootFilter filter(Ehat);

    std::size_t alpha = 1;
    for (const auto& [name, arity] : F.signature) alpha = std::max(alpha, arity);
    std::size_t max_size = 1;  // nodes of a full alpha-ary tree of height k
    for (std::size_t h = 0; h < v.bound_k; ++h) max_size = 1 + alpha * max_size;

    NfStream nfs{F, v.bound_k, limits.nf_cap};
    std::size_t pairs = 0;
    auto check = [&](const Term& u, const Term& w) -> bool {
        if (!filter.may_connect(u, w)) return false;
        if (++pairs > limits.pair_cap)
            throw Error("cap-exceeded",
                        "pair budget of " + std::to_string(limits.pair_cap) +
                            " exhausted after " + std::to_string(nfs.total) +
                            " normal forms without a verdict");
        EquivResult res = decide_equiv_with(u, w, F, Ehat);
        if (!res.equivalent) return false;
        v.status = UnVerdict::Status::not_un_eq;
        v.witness = UnWitness{u, w, std::move(res.trace)};
        return true;
    };

    for (std::size_t c = 2; c <= 2 * max_size; ++c) {
        for (std::size_t s1 = 1; 2 * s1 <= c; ++s1) {
            std::size_t s2 = c - s1;
            if (s2 > max_size) continue;
            nfs.ensure(s2);
            const auto& g1 = nfs.by_size[s1];
            const auto& g2 = nfs.by_size[s2];
            for (std::size_t i = 0; i < g1.size(); ++i) {
                std::size_t jstart = s1 == s2 ? i + 1 : 0;
                for (std::size_t j = jstart; j < g2.size(); ++j) {
                    if (check(g1[i], g2[j])) {
                        v.nf_count = nfs.total;
                        return v;
                    }
                }
            }
        }
    }
    v.nf_count = nfs.total;
    v.status = UnVerdict::Status::un_eq;
    return v;
}

namespace {

nlohmann::json witness_json(const UnVerdict& v, const FlatteningResult& fr) {
    if (!v.witness) return nullptr;
    EquationSet Ehat = closure_of(v.analyzed);
    ProofTrace lowered = lower_trace(v.witness->trace, Ehat);
    return {{"n0", to_string(v.witness->n0)},
            {"n1", to_string(v.witness->n1)},
            {"n0_original", to_string(unabbreviate(v.witness->n0, fr.constant_table))},
            {"n1_original", to_string(unabbreviate(v.witness->n1, fr.constant_table))},
            {"trace", trace_to_json(lowered)}};
}

}  // namespace

nlohmann::json verdict_json(const UnVerdict& v, const FlatteningResult& fr) {
    return {{"status", v.status == UnVerdict::Status::un_eq ? "UN=" : "not-UN="},
            {"k", v.bound_k},
            {"nf_count", v.nf_count},
            {"witness", witness_json(v, fr)}};
}

std::string witness_report(const UnVerdict& v, const FlatteningResult& fr) {
    std::ostringstream os;
    if (v.status == UnVerdict::Status::un_eq) {
        os << "UN=: no two distinct equivalent normal forms of height <= "
           << v.bound_k << " (" << v.nf_count << " normal forms checked)\n";
        return os.str();
    }
    const UnWitness& w = *v.witness;
    os << "NOT UN=: " << to_string(w.n0) << " =R " << to_string(w.n1) << "\n";
    Term o0 = unabbreviate(w.n0, fr.constant_table);
    Term o1 = unabbreviate(w.n1, fr.constant_table);
    if (!(o0 == w.n0) || !(o1 == w.n1))
        os << "  over the original signature: " << to_string(o0) << " =R "
           << to_string(o1) << "\n";
    std::set<Term> wcs;
    collect_constants(w.n0, wcs);
    collect_constants(w.n1, wcs);
    for (const Term& c : wcs)
        if (auto it = fr.constant_table.find(c.name());
            it != fr.constant_table.end())
            os << "  where " << c.name() << " abbreviates "
               << to_string(it->second) << "\n";
    EquationSet Ehat = closure_of(v.analyzed);
    ProofTrace lowered = lower_trace(w.trace, Ehat);
    os << "  proof (" << lowered.steps.size() << " rule steps):\n";
    Term cur = lowered.from;
    os << "    " << to_string(cur) << "\n";
    for (const TraceStep& st : lowered.steps) {
        const Equation& eq = Ehat.eqs[st.eq];
        const Term& dst = st.reversed ? eq.lhs : eq.rhs;
        cur = replace_at(cur, st.pos, apply_subst(dst, st.subst));
        os << "    <-> " << to_string(cur) << "   (rule " << eq.rule_id
           << (st.reversed ? " reversed" : "") << " at " << to_string(st.pos)
           << ")\n";
    }
    return os.str();
}

}  // namespace untrs
