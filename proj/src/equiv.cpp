#include "untrs/equiv.hpp"

#include <algorithm>
#include <deque>

namespace untrs {

namespace {

// Query variables become rigid constants for the duration of the decision.
struct Freezer {
    std::map<std::string, std::string> var_to_const;
    std::map<std::string, std::string> const_to_var;

    Freezer(const Term& s, const Term& t, const Trs& R,
            const EquationSet& Ehat) {
        std::set<std::string> taken;
        for (const auto& [name, arity] : R.signature) taken.insert(name);
        for (const Equation& eq : Ehat.eqs) {
            std::set<Term> cs;
            collect_constants(eq.lhs, cs);
            collect_constants(eq.rhs, cs);
            for (const Term& c : cs) taken.insert(c.name());
        }
        std::set<std::string> vars = vars_of(s);
        collect_vars(t, vars);
        for (const std::string& x : vars) {
            std::string name = "_v" + x;
            while (taken.count(name)) name = "_" + name;
            taken.insert(name);
            var_to_const[x] = name;
            const_to_var[name] = x;
        }
    }

    Term freeze(const Term& t) const {
        if (t.is_var()) return Term::constant(var_to_const.at(t.name()));
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const Term& a : t.args()) args.push_back(freeze(a));
        return Term::app(t.name(), std::move(args));
    }

    Term thaw(const Term& t) const {
        if (t.is_var()) return t;
        if (t.is_const()) {
            auto it = const_to_var.find(t.name());
            if (it != const_to_var.end()) return Term::var(it->second);
        }
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const Term& a : t.args()) args.push_back(thaw(a));
        return Term::app(t.name(), std::move(args));
    }
};

struct Just {
    enum Kind { Decompose, RootStep, Chain } kind;
    int u = -1, v = -1;  // the pair as discovered
    int eq = -1;         // RootStep
    bool lhs_on_u = false;
    Subst sigma;  // RootStep: total over the equation's variables
    int mid = -1;  // Chain
};

struct Decider {
    const EquationSet& E;
    std::vector<Term> terms;          // the universe, sorted
    std::map<Term, int> index;
    std::vector<std::set<int>> adj;   // symmetric relation, refl implicit
    std::map<std::pair<int, int>, std::size_t> just_of;
    std::vector<Just> justs;

    explicit Decider(const EquationSet& e) : E(e) {}

    void build_universe(const Term& s, const Term& t, const Trs& R) {
        std::set<Term> u;
        collect_subterms(s, u);
        collect_subterms(t, u);
        for (const Term& c : R.signature_constants()) u.insert(c);
        for (const Equation& eq : E.eqs) {
            collect_constants(eq.lhs, u);
            collect_constants(eq.rhs, u);
        }
        terms.assign(u.begin(), u.end());
        for (std::size_t i = 0; i < terms.size(); ++i)
            index[terms[i]] = static_cast<int>(i);
        adj.assign(terms.size(), {});
    }

    bool rel(int i, int j) const { return i == j || adj[i].count(j) > 0; }

    bool add(int u, int v, Just j) {
        if (rel(u, v)) return false;
        j.u = u;
        j.v = v;
        adj[u].insert(v);
        adj[v].insert(u);
        just_of[{std::min(u, v), std::max(u, v)}] = justs.size();
        justs.push_back(std::move(j));
        return true;
    }

    bool decompose_round() {
        bool changed = false;
        int n = static_cast<int>(terms.size());
        for (int i = 0; i < n; ++i) {
            const Term& a = terms[i];
            if (a.is_var() || a.args().empty()) continue;
            for (int j = i + 1; j < n; ++j) {
                if (rel(i, j)) continue;
                const Term& b = terms[j];
                if (b.is_var() || b.name() != a.name() ||
                    b.args().size() != a.args().size())
                    continue;
                bool ok = true;
                for (std::size_t k = 0; ok && k < a.args().size(); ++k)
                    ok = rel(index.at(a.args()[k]), index.at(b.args()[k]));
                if (ok) changed |= add(i, j, Just{Just::Decompose});
            }
        }
        return changed;
    }

    // Substitutions sigma over vars(l) with u "matching l up to the
    // relation" at the root.
    std::vector<Subst> lhs_matches(int u, const Term& l) {
        const Term& tu = terms[u];
        if (l.is_var()) return {Subst{{l.name(), tu}}};
        if (l.is_const())
            return rel(index.at(l), u) ? std::vector<Subst>{Subst{}}
                                       : std::vector<Subst>{};
        if (tu.is_var() || tu.name() != l.name() ||
            tu.args().size() != l.args().size())
            return {};
        std::vector<Subst> out{Subst{}};
        for (std::size_t k = 0; k < l.args().size(); ++k) {
            const Term& lk = l.args()[k];
            int uk = index.at(tu.args()[k]);
            std::vector<Subst> next;
            if (lk.is_const()) {
                if (rel(index.at(lk), uk)) next = std::move(out);
            } else {  // variable argument
                for (const Subst& s : out) {
                    auto it = s.find(lk.name());
                    if (it != s.end()) {
                        if (rel(index.at(it->second), uk)) next.push_back(s);
                        continue;
                    }
                    for (int w : adj[uk]) {
                        Subst s2 = s;
                        s2[lk.name()] = terms[w];
                        next.push_back(std::move(s2));
                    }
                    Subst s2 = s;
                    s2[lk.name()] = terms[uk];
                    next.push_back(std::move(s2));
                }
            }
            out = std::move(next);
            if (out.empty()) return out;
        }
        return out;
    }

    // Whether v matches r under an extension of sigma; on success sigma is
    // extended to cover all of r's variables.
    bool rhs_match(int v, const Term& r, Subst& sigma) {
        const Term& tv = terms[v];
        if (r.is_var()) {
            auto it = sigma.find(r.name());
            if (it != sigma.end()) return rel(index.at(it->second), v);
            sigma[r.name()] = tv;
            return true;
        }
        if (r.is_const()) return rel(index.at(r), v);
        if (tv.is_var() || tv.name() != r.name() ||
            tv.args().size() != r.args().size())
            return false;
        for (std::size_t k = 0; k < r.args().size(); ++k) {
            const Term& rk = r.args()[k];
            int vk = index.at(tv.args()[k]);
            if (rk.is_const()) {
                if (!rel(index.at(rk), vk)) return false;
            } else {
                auto it = sigma.find(rk.name());
                if (it != sigma.end()) {
                    if (!rel(index.at(it->second), vk)) return false;
                } else {
                    sigma[rk.name()] = terms[vk];
                }
            }
        }
        return true;
    }

    bool rootstep_round() {
        bool changed = false;
        int n = static_cast<int>(terms.size());
        for (int u = 0; u < n; ++u) {
            for (const Equation& eq : E.eqs) {
                for (bool lhs_on_u : {true, false}) {
                    const Term& l = lhs_on_u ? eq.lhs : eq.rhs;
                    const Term& r = lhs_on_u ? eq.rhs : eq.lhs;
                    for (const Subst& base : lhs_matches(u, l)) {
                        for (int v = 0; v < n; ++v) {
                            if (rel(u, v)) continue;
                            Subst sigma = base;
                            if (!rhs_match(v, r, sigma)) continue;
                            Just j{Just::RootStep};
                            j.eq = eq.id;
                            j.lhs_on_u = lhs_on_u;
                            j.sigma = std::move(sigma);
                            changed |= add(u, v, std::move(j));
                        }
                    }
                }
            }
        }
        return changed;
    }

    bool chain_round() {
        bool changed = false;
        int n = static_cast<int>(terms.size());
        for (int i = 0; i < n; ++i) {
            for (int w : adj[i]) {
                for (int j : adj[w]) {
                    if (j <= i || rel(i, j)) continue;
                    Just jj{Just::Chain};
                    jj.mid = w;
                    changed |= add(i, j, std::move(jj));
                }
            }
        }
        return changed;
    }

    void saturate() {
        bool changed = true;
        while (changed) {
            changed = false;
            changed |= decompose_round();
            changed |= rootstep_round();
            changed |= chain_round();
        }
    }

    void build_steps(int u, int v, const Position& pos,
                     std::vector<TraceStep>& out) const {
        if (u == v) return;
        std::size_t ji = just_of.at({std::min(u, v), std::max(u, v)});
        const Just& j = justs[ji];
        std::vector<TraceStep> fwd;
        build_from_just(j, pos, fwd);
        if (j.u == u) {
            out.insert(out.end(), fwd.begin(), fwd.end());
        } else {
            // recorded for the opposite orientation: invert
            for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) {
                TraceStep st = *it;
                st.reversed = !st.reversed;
                out.push_back(std::move(st));
            }
        }
    }

    void build_from_just(const Just& j, const Position& pos,
                         std::vector<TraceStep>& out) const {
        const Term& tu = terms[j.u];
        const Term& tv = terms[j.v];
        switch (j.kind) {
        case Just::Decompose:
            for (std::size_t k = 0; k < tu.args().size(); ++k) {
                Position p = pos;
                p.push_back(k);
                build_steps(index.at(tu.args()[k]), index.at(tv.args()[k]), p,
                            out);
            }
            break;
        case Just::RootStep: {
            const Equation& eq = E.eqs[j.eq];
            const Term& l = j.lhs_on_u ? eq.lhs : eq.rhs;
            const Term& r = j.lhs_on_u ? eq.rhs : eq.lhs;
            bridge(j.u, l, j.sigma, pos, false, out);
            out.push_back(TraceStep{pos, eq.id, !j.lhs_on_u, j.sigma});
            bridge(j.v, r, j.sigma, pos, true, out);
            break;
        }
        case Just::Chain:
            build_steps(j.u, j.mid, pos, out);
            build_steps(j.mid, j.v, pos, out);
            break;
        }
    }

    // Steps from terms[u] to side*sigma (a flat equation side instance);
    // if `invert`, the other way around. Only pairs that were already
    // related when the root step fired are recursed into.
    void bridge(int u, const Term& side, const Subst& sigma,
                const Position& pos, bool invert,
                std::vector<TraceStep>& out) const {
        std::vector<TraceStep> fwd;
        if (side.is_var() || side.is_const()) {
            build_steps(u, index.at(apply_subst(side, sigma)), pos, fwd);
        } else {
            const Term& tu = terms[u];
            for (std::size_t k = 0; k < tu.args().size(); ++k) {
                Position p = pos;
                p.push_back(k);
                build_steps(index.at(tu.args()[k]),
                            index.at(apply_subst(side.args()[k], sigma)), p,
                            fwd);
            }
        }
        if (!invert) {
            out.insert(out.end(), fwd.begin(), fwd.end());
        } else {
            for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) {
                TraceStep st = *it;
                st.reversed = !st.reversed;
                out.push_back(std::move(st));
            }
        }
    }
};

}  // namespace

EquivResult decide_equiv_with(const Term& s, const Term& t, const Trs& R,
                              const EquationSet& Ehat) {
    if (!R.flat()) throw Error("not-flat", "decide_equiv requires a flat TRS");
    Freezer fr(s, t, R, Ehat);
    Term fs = fr.freeze(s);
    Term ft = fr.freeze(t);

    Decider d(Ehat);
    d.build_universe(fs, ft, R);
    d.saturate();

    int is = d.index.at(fs);
    int it = d.index.at(ft);
    if (!d.rel(is, it)) return {};

    EquivResult res;
    res.equivalent = true;
    std::vector<TraceStep> steps;
    d.build_steps(is, it, {}, steps);
    res.trace.from = s;
    res.trace.to = t;
    for (TraceStep& st : steps) {
        for (auto& [x, term] : st.subst) term = fr.thaw(term);
        res.trace.steps.push_back(std::move(st));
    }
    return res;
}

EquivResult decide_equiv(const Term& s, const Term& t, const Trs& R) {
    return decide_equiv_with(s, t, R, closure_of(R));
}

bool oracle_equiv(const Term& s, const Term& t, const Trs& R,
                  std::size_t size_cap, std::size_t step_cap) {
    EquationSet none;  // freezing only needs the signature
    Freezer fr(s, t, R, none);
    Term fs = fr.freeze(s);
    Term ft = fr.freeze(t);
    if (fs == ft) return true;

    std::vector<Term> pool = R.signature_constants();
    {
        std::set<Term> cs;
        collect_constants(fs, cs);
        collect_constants(ft, cs);
        for (const Term& c : cs)
            if (std::find(pool.begin(), pool.end(), c) == pool.end())
                pool.push_back(c);
    }

    std::set<Term> seen_a{fs}, seen_b{ft};
    std::deque<Term> qa{fs}, qb{ft};
    std::size_t expanded = 0;
    auto grow = [&](std::deque<Term>& q, std::set<Term>& mine,
                    const std::set<Term>& other) -> int {
        if (q.empty()) return 0;
        Term cur = q.front();
        q.pop_front();
        ++expanded;
        for (auto& [succ, step] :
             one_step_successors(cur, R, Direction::symmetric, pool)) {
            if (term_size(succ) > size_cap) continue;
            if (!mine.insert(succ).second) continue;
            if (other.count(succ)) return 1;
            q.push_back(std::move(succ));
        }
        return -1;
    };
    while (expanded < step_cap) {
        bool use_a = !qa.empty() && (qb.empty() || qa.size() <= qb.size());
        if (!use_a && qb.empty()) break;
        if ((use_a ? grow(qa, seen_a, seen_b) : grow(qb, seen_b, seen_a)) == 1)
            return true;
    }
    return false;
}

}  // namespace untrs
