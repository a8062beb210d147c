#pragma once

// Seeded random generators shared by the unit tests and the acceptance
// suite. Everything takes an explicit engine so failures reproduce.

#include <random>
#include <string>
#include <vector>

#include "untrs/pcp.hpp"
#include "untrs/trs.hpp"

namespace untrs::testing {

using Rng = std::mt19937;

inline std::size_t pick(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool coin(Rng& rng) { return pick(rng, 2) == 0; }

struct Corpus {
    std::vector<std::string> vars = {"x", "y"};
    std::vector<std::string> constants = {"a", "b", "c"};
    // name/arity; at most 3 function symbols, arity <= 2
    std::vector<std::pair<std::string, std::size_t>> funs = {
        {"f", 2}, {"g", 1}, {"p", 2}};
};

inline Trs corpus_signature(const Corpus& c) {
    Trs R;
    for (const std::string& a : c.constants) R.signature[a] = 0;
    for (const auto& [name, ar] : c.funs) R.signature[name] = ar;
    for (const std::string& v : c.vars) R.declared_vars.insert(v);
    return R;
}

// A variable or constant.
inline Term random_leaf(Rng& rng, const Corpus& c, bool allow_var) {
    if (allow_var && coin(rng)) return Term::var(c.vars[pick(rng, c.vars.size())]);
    return Term::constant(c.constants[pick(rng, c.constants.size())]);
}

// Height <= 1, variables only from `allowed_vars` when given.
inline Term random_flat_term(Rng& rng, const Corpus& c, bool allow_var) {
    if (pick(rng, 3) == 0) return random_leaf(rng, c, allow_var);
    const auto& [name, ar] = c.funs[pick(rng, c.funs.size())];
    std::vector<Term> args;
    for (std::size_t i = 0; i < ar; ++i)
        args.push_back(random_leaf(rng, c, allow_var));
    return Term::app(name, args);
}

// Random flat TRS: <= 3 function symbols, arity <= 2, <= 5 rules,
// Var(rhs) contained in Var(lhs), no variable left-hand sides.
inline Trs random_flat_trs(Rng& rng) {
    Corpus c;
    Trs R = corpus_signature(c);
    std::size_t n = 1 + pick(rng, 5);
    for (std::size_t i = 0; i < n; ++i) {
        Term lhs = random_flat_term(rng, c, true);
        while (lhs.is_var()) lhs = random_flat_term(rng, c, true);
        Term rhs = random_flat_term(rng, c, true);
        // keep rules variable-closed so forward rewriting is classical
        std::set<std::string> lv = vars_of(lhs);
        std::vector<std::string> lvv(lv.begin(), lv.end());
        Term fixed = rhs;
        for (const std::string& v : vars_of(rhs))
            if (!lv.count(v)) {
                Term repl = lvv.empty()
                                ? Term::constant(c.constants[pick(rng, 3)])
                                : Term::var(lvv[pick(rng, lvv.size())]);
                Subst s{{v, repl}};
                fixed = apply_subst(fixed, s);
            }
        R.rules.push_back(
            Rule{static_cast<int>(R.rules.size()), lhs, fixed});
    }
    return R;
}

inline Term random_ground_term(Rng& rng, const Corpus& c, std::size_t height) {
    if (height == 0 || pick(rng, 3) == 0)
        return Term::constant(c.constants[pick(rng, c.constants.size())]);
    const auto& [name, ar] = c.funs[pick(rng, c.funs.size())];
    std::vector<Term> args;
    for (std::size_t i = 0; i < ar; ++i)
        args.push_back(random_ground_term(rng, c, height - 1));
    return Term::app(name, args);
}

// Random shallow TRS: like the flat generator but arguments may be deep
// ground terms.
inline Trs random_shallow_trs(Rng& rng) {
    Corpus c;
    Trs R = corpus_signature(c);
    auto arg = [&](bool allow_var) {
        std::size_t roll = pick(rng, 4);
        if (roll == 0) return random_ground_term(rng, c, 1 + pick(rng, 2));
        return random_leaf(rng, c, allow_var);
    };
    auto side = [&](bool allow_var) {
        if (pick(rng, 3) == 0) return random_leaf(rng, c, allow_var);
        const auto& [name, ar] = c.funs[pick(rng, c.funs.size())];
        std::vector<Term> args;
        for (std::size_t i = 0; i < ar; ++i) args.push_back(arg(allow_var));
        return Term::app(name, args);
    };
    std::size_t n = 1 + pick(rng, 5);
    for (std::size_t i = 0; i < n; ++i) {
        Term lhs = side(true);
        while (lhs.is_var()) lhs = side(true);
        Term rhs = side(true);
        std::set<std::string> lv = vars_of(lhs);
        std::vector<std::string> lvv(lv.begin(), lv.end());
        for (const std::string& v : vars_of(rhs))
            if (!lv.count(v)) {
                Term repl = lvv.empty()
                                ? Term::constant(c.constants[pick(rng, 3)])
                                : Term::var(lvv[pick(rng, lvv.size())]);
                Subst s{{v, repl}};
                rhs = apply_subst(rhs, s);
            }
        R.rules.push_back(Rule{static_cast<int>(R.rules.size()), lhs, rhs});
    }
    return R;
}

// Solvable instance by double segmentation: pick a word, cut it twice,
// pair the pieces up. The identity sequence 1..m is then a solution.
// Pieces may be empty, so callers must allow empty words.
struct SolvablePcp {
    PcpInstance instance;
    TileSequence solution;
};

inline SolvablePcp random_solvable_pcp(Rng& rng) {
    std::vector<std::string> alphabet = {"a", "b"};
    std::size_t len = 3 + pick(rng, 6);
    std::vector<std::string> w;
    for (std::size_t i = 0; i < len; ++i)
        w.push_back(alphabet[pick(rng, 2)]);
    std::size_t m = 1 + pick(rng, 3);
    auto cuts = [&]() {
        std::vector<std::size_t> c = {0, len};
        for (std::size_t i = 1; i < m; ++i) c.push_back(pick(rng, len + 1));
        std::sort(c.begin(), c.end());
        return c;
    };
    std::vector<std::size_t> ca = cuts(), cb = cuts();
    PcpInstance P;
    P.alphabet = alphabet;
    TileSequence sol;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::string> u(w.begin() + ca[i], w.begin() + ca[i + 1]);
        std::vector<std::string> v(w.begin() + cb[i], w.begin() + cb[i + 1]);
        P.tiles.emplace_back(u, v);
        sol.push_back(i + 1);
    }
    return SolvablePcp{P, sol};
}

// Replays a trace step by step and returns every visited term, endpoints
// included. Throws on any mismatch, so it doubles as a verifier.
inline std::vector<Term> replay_trace(const ProofTrace& tr,
                                      const EquationSet& E) {
    std::vector<Term> out = {tr.from};
    Term cur = tr.from;
    for (const TraceStep& st : tr.steps) {
        const Equation& eq = E.eqs.at(st.eq);
        const Term& src = st.reversed ? eq.rhs : eq.lhs;
        const Term& dst = st.reversed ? eq.lhs : eq.rhs;
        if (subterm_at(cur, st.pos) != apply_subst(src, st.subst))
            throw Error("replay-mismatch", "at " + to_string(cur));
        cur = replace_at(cur, st.pos, apply_subst(dst, st.subst));
        out.push_back(cur);
    }
    if (cur != tr.to) throw Error("replay-mismatch", "endpoint");
    return out;
}

}  // namespace untrs::testing
