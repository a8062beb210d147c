#include "untrs/pcp.hpp"

#include <algorithm>
#include <cctype>

namespace untrs {

namespace {

using Word = std::vector<std::string>;

const char* kNil = "nil";

std::string tile_sym(std::size_t i) { return "t" + std::to_string(i); }

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' &&
            c != '\'')
            return false;
    return !std::isdigit(static_cast<unsigned char>(s[0])) || s == "0" ||
           s == "1";
}

}  // namespace

void validate_instance(const PcpInstance& P, bool allow_empty_words) {
    if (P.tiles.empty()) throw Error("bad-instance", "no tiles");
    if (P.alphabet.empty()) throw Error("bad-instance", "empty alphabet");
    std::set<std::string> letters;
    for (const std::string& g : P.alphabet) {
        if (!is_identifier(g) || g.find('_') != std::string::npos)
            throw Error("bad-instance", "bad letter name: " + g);
        if (g == "f" || g == "g" || g == "h" || g == kNil || g == "0" ||
            g == "1" || (g[0] == 't' && g.size() > 1 &&
                         g.find_first_not_of("0123456789", 1) == std::string::npos))
            throw Error("name-collision",
                        "letter collides with a generated symbol: " + g);
        if (!letters.insert(g).second)
            throw Error("bad-instance", "duplicate letter: " + g);
    }
    for (std::size_t i = 0; i < P.tiles.size(); ++i) {
        for (const Word* w : {&P.tiles[i].first, &P.tiles[i].second}) {
            if (w->empty() && !allow_empty_words)
                throw Error("bad-instance",
                            "empty word in tile " + std::to_string(i + 1));
            for (const std::string& g : *w)
                if (!letters.count(g))
                    throw Error("bad-instance", "letter not in alphabet: " + g);
        }
    }
}

bool verify_solution(const PcpInstance& P, const TileSequence& s) {
    if (s.empty()) throw Error("bad-instance", "empty tile sequence");
    Word a, b;
    for (std::size_t i : s) {
        if (i < 1 || i > P.tiles.size())
            throw Error("index-out-of-range",
                        "tile index " + std::to_string(i) + " out of 1.." +
                            std::to_string(P.tiles.size()));
        const auto& [u, v] = P.tiles[i - 1];
        a.insert(a.end(), u.begin(), u.end());
        b.insert(b.end(), v.begin(), v.end());
    }
    return a == b;
}

Term word_term(const Word& letters, const Term& tail) {
    Term t = tail;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        t = Term::app(*it, {t});
    return t;
}

Term word_term(const Word& letters) {
    return word_term(letters, Term::constant(kNil));
}

namespace {

struct Builder {
    Trs trs;
    std::map<std::string, int> label;  // rule label -> rule id

    Term v(const char* n) { return Term::var(n); }

    void sym(const std::string& name, std::size_t arity) {
        trs.signature[name] = arity;
    }

    void rule(const std::string& lab, Term lhs, Term rhs) {
        int id = static_cast<int>(trs.rules.size());
        label[lab] = id;
        trs.rules.push_back(Rule{id, std::move(lhs), std::move(rhs)});
    }

    void self_loop(const std::string& name, std::size_t arity) {
        std::vector<Term> args;
        const char* names[] = {"x", "y", "z"};
        for (std::size_t k = 0; k < arity; ++k) args.push_back(v(names[k]));
        Term t = Term::app(name, args);
        rule("nf:" + name, t, t);
    }
};

// The n chain rules simulating tile i, plus the h entry rule; right-flat
// orientation. Labels RT:i:0 .. RT:i:n.
void emit_tile_chain(Builder& b, const PcpInstance& P, std::size_t i) {
    const auto& [u, w] = P.tiles[i - 1];
    std::size_t n = std::max(u.size(), w.size());
    auto hik = [&](std::size_t k) {
        return "h_" + std::to_string(i) + "_" + std::to_string(k);
    };
    auto pref = [&](const Word& word, std::size_t k, const char* var) {
        // the k-th letter (1-based) wrapped around the variable, or the
        // bare variable when k exceeds the word
        return k <= word.size() ? Term::app(word[k - 1], {b.v(var)})
                                : b.v(var);
    };
    if (n == 0) {  // empty tile: connect h directly
        b.rule("RT:" + std::to_string(i) + ":0",
               Term::app("h", {Term::app(tile_sym(i), {b.v("x")}), b.v("y"),
                               b.v("z")}),
               Term::app("h", {b.v("x"), b.v("y"), b.v("z")}));
        return;
    }
    for (std::size_t k = 0; k < n; ++k) b.sym(hik(k), 3);
    b.rule("RT:" + std::to_string(i) + ":0",
           Term::app("h", {Term::app(tile_sym(i), {b.v("x")}), b.v("y"),
                           b.v("z")}),
           Term::app(hik(0), {b.v("x"), b.v("y"), b.v("z")}));
    for (std::size_t k = 1; k < n; ++k)
        b.rule("RT:" + std::to_string(i) + ":" + std::to_string(k),
               Term::app(hik(k), {b.v("x"), pref(u, k, "y"), pref(w, k, "z")}),
               Term::app(hik(k - 1), {b.v("x"), b.v("y"), b.v("z")}));
    b.rule("RT:" + std::to_string(i) + ":" + std::to_string(n),
           Term::app("h", {b.v("x"), pref(u, n, "y"), pref(w, n, "z")}),
           Term::app(hik(n - 1), {b.v("x"), b.v("y"), b.v("z")}));
}

Builder build(const PcpInstance& P, bool left_flat, bool allow_empty_words) {
    validate_instance(P, allow_empty_words);
    Builder b;
    Term nil = Term::constant(kNil);
    b.sym(kNil, 0);
    b.sym("0", 0);
    b.sym("1", 0);
    b.sym("f", 3);
    b.sym("g", 2);
    b.sym("h", 3);
    for (const std::string& g : P.alphabet) {
        b.sym(g, 1);
        b.sym("f_" + g, 3);
    }
    for (std::size_t i = 1; i <= P.tiles.size(); ++i) b.sym(tile_sym(i), 1);

    Builder rf;  // right-flat families, reversed later if needed
    rf.trs.signature = b.trs.signature;
    for (const std::string& g : P.alphabet) {
        rf.rule("RS1:" + g,
                Term::app("f", {Term::app(g, {rf.v("x")}), rf.v("y"), rf.v("z")}),
                Term::app("f_" + g, {rf.v("x"), rf.v("y"), rf.v("z")}));
        rf.rule("RS2:" + g,
                Term::app("f", {rf.v("x"), Term::app(g, {rf.v("y")}),
                                Term::app(g, {rf.v("z")})}),
                Term::app("f_" + g, {rf.v("x"), rf.v("y"), rf.v("z")}));
    }
    for (std::size_t i = 1; i <= P.tiles.size(); ++i) emit_tile_chain(rf, P, i);
    b.trs.signature = rf.trs.signature;

    if (!left_flat) {
        for (const std::string& g : P.alphabet)
            b.rule("R0:" + g,
                   Term::app("f", {Term::app(g, {b.v("x")}), nil, nil}),
                   Term::constant("0"));
        b.rule("R0:g", Term::app("f", {nil, b.v("x"), b.v("y")}),
               Term::app("g", {b.v("x"), b.v("y")}));
        for (std::size_t i = 1; i <= P.tiles.size(); ++i)
            b.rule("R1:" + std::to_string(i),
                   Term::app("h", {Term::app(tile_sym(i), {b.v("x")}), nil, nil}),
                   Term::constant("1"));
        b.rule("R1:g", Term::app("h", {nil, b.v("x"), b.v("y")}),
               Term::app("g", {b.v("x"), b.v("y")}));
        for (const Rule& r : rf.trs.rules) {
            for (const auto& [lab, id] : rf.label)
                if (id == r.id) b.rule(lab, r.lhs, r.rhs);
        }
    } else {
        b.rule("Rj:0a", Term::app("j0", {b.v("x")}), Term::constant("0"));
        b.rule("Rj:0b", Term::app("j0", {b.v("x")}),
               Term::app("f", {b.v("x"), nil, nil}));
        b.rule("Rj:1a", Term::app("j1", {b.v("x")}),
               Term::app("h", {b.v("x"), nil, nil}));
        b.rule("Rj:1b", Term::app("j1", {b.v("x")}), Term::constant("1"));
        b.sym("j0", 1);
        b.sym("j1", 1);
        for (const std::string& g : P.alphabet) {
            b.sym("g_" + g + "_" + g, 2);
            b.rule("Rg:f:" + g, Term::app("g_" + g + "_" + g, {b.v("x"), b.v("y")}),
                   Term::app("f", {nil, Term::app(g, {b.v("x")}),
                                   Term::app(g, {b.v("y")})}));
        }
        for (const std::string& gi : P.alphabet)
            for (const std::string& gj : P.alphabet) {
                b.sym("g_" + gi + "_" + gj, 2);
                b.rule("Rg:h:" + gi + ":" + gj,
                       Term::app("g_" + gi + "_" + gj, {b.v("x"), b.v("y")}),
                       Term::app("h", {nil, Term::app(gi, {b.v("x")}),
                                       Term::app(gj, {b.v("y")})}));
            }
        for (const Rule& r : rf.trs.rules)
            for (const auto& [lab, id] : rf.label)
                if (id == r.id) b.rule(lab, r.rhs, r.lhs);  // reversed
    }

    // self-loops pinning the normal forms down to 0 and 1
    b.self_loop("f", 3);
    b.self_loop("h", 3);
    for (const std::string& g : P.alphabet) b.self_loop("f_" + g, 3);
    for (const auto& [name, arity] : b.trs.signature)
        if (name.rfind("h_", 0) == 0) b.self_loop(name, 3);
    if (!left_flat) {
        b.self_loop("g", 2);
    } else {
        for (const auto& [name, arity] : b.trs.signature)
            if (name.rfind("g_", 0) == 0) b.self_loop(name, 2);
    }
    for (const std::string& g : P.alphabet) b.self_loop(g, 1);
    b.self_loop(kNil, 0);
    for (std::size_t i = 1; i <= P.tiles.size(); ++i)
        b.self_loop(tile_sym(i), 1);
    return b;
}

}  // namespace

Trs generate_right_flat(const PcpInstance& P, bool allow_empty_words) {
    return build(P, false, allow_empty_words).trs;
}

Trs generate_left_flat(const PcpInstance& P, bool allow_empty_words) {
    return build(P, true, allow_empty_words).trs;
}

std::vector<Rule> right_flat_tile_rules(const PcpInstance& P, std::size_t i) {
    validate_instance(P);
    if (i < 1 || i > P.tiles.size())
        throw Error("index-out-of-range", "tile index " + std::to_string(i));
    Builder b;
    emit_tile_chain(b, P, i);
    return b.trs.rules;
}

namespace {

struct Replay {
    const Trs& R;
    EquationSet E;
    std::map<int, int> eq_of_rule;
    const std::map<std::string, int>& label;
    Term cur;
    std::vector<TraceStep> steps;

    Replay(const Builder& b, Term start)
        : R(b.trs), E(to_equations(b.trs)), label(b.label),
          cur(std::move(start)) {
        for (const Equation& eq : E.eqs) eq_of_rule[eq.rule_id] = eq.id;
    }

    void apply(const std::string& lab, bool reversed, Subst extra = {}) {
        const Rule& r = R.rules[label.at(lab)];
        const Term& src = reversed ? r.rhs : r.lhs;
        const Term& dst = reversed ? r.lhs : r.rhs;
        auto sigma = match_term(src, cur);
        if (!sigma)
            throw Error("internal",
                        "derivation step does not apply: " + lab + " at " +
                            to_string(cur));
        for (auto& [x, t] : extra) (*sigma)[x] = t;
        steps.push_back(
            TraceStep{{}, eq_of_rule.at(r.id), reversed, *sigma});
        cur = apply_subst(dst, *sigma);
    }
};

// Tile simulation h(t_i(x), y, z) <->* h(x, u^R(y), v^R(z)); in the
// left-flat system the same chain runs with stored orientations flipped.
void consume_tile(Replay& rp, const PcpInstance& P, std::size_t i,
                  bool left_flat) {
    const auto& [u, w] = P.tiles[i - 1];
    std::size_t n = std::max(u.size(), w.size());
    auto lab = [&](std::size_t k) {
        return "RT:" + std::to_string(i) + ":" + std::to_string(k);
    };
    if (n == 0) {
        rp.apply(lab(0), left_flat);
        return;
    }
    rp.apply(lab(0), left_flat);  // h(t_i(x),y,z) -> h_i_0(x,y,z)
    for (std::size_t k = 1; k <= n; ++k)
        rp.apply(lab(k), !left_flat);  // h_i_(k-1) -> h_i_k / final h
}

}  // namespace

ProofTrace solution_derivation(const PcpInstance& P, const TileSequence& s,
                               PcpVariant variant) {
    if (!verify_solution(P, s))
        throw Error("not-a-solution", "sequence is not a solution");
    bool lf = variant == PcpVariant::left_flat;
    Builder b = build(P, lf, true);

    Word word;
    for (std::size_t i : s) {
        const Word& u = P.tiles[i - 1].first;
        word.insert(word.end(), u.begin(), u.end());
    }
    Term w = word_term(word);

    // 0-side: 0 <-> f(w,nil,nil) <->* f(nil,w^R,w^R) <-> (g side)
    Replay zero(b, Term::constant("0"));
    if (!lf) {
        zero.apply("R0:" + word.front(), true,
                   Subst{{"x", word_term(Word(word.begin() + 1, word.end()))}});
    } else {
        zero.apply("Rj:0a", true, Subst{{"x", w}});
        zero.apply("Rj:0b", false);
    }
    while (!(zero.cur.args()[0] == Term::constant(kNil))) {
        std::string g = zero.cur.args()[0].name();
        zero.apply("RS1:" + g, lf);
        zero.apply("RS2:" + g, !lf);
    }
    std::string last = word.back();  // outermost letter of w^R
    if (!lf) {
        zero.apply("R0:g", false);
    } else {
        zero.apply("Rg:f:" + last, true);
    }

    // 1-side, run forward from 1 and appended inverted
    Replay one(b, Term::constant("1"));
    if (!lf) {
        Term tail = Term::constant(kNil);
        for (auto it = s.rbegin(); it != s.rend() - 1; ++it)
            tail = Term::app(tile_sym(*it), {tail});
        one.apply("R1:" + std::to_string(s.front()), true,
                  Subst{{"x", tail}});
    } else {
        Term tiles = Term::constant(kNil);
        for (auto it = s.rbegin(); it != s.rend(); ++it)
            tiles = Term::app(tile_sym(*it), {tiles});
        one.apply("Rj:1b", true, Subst{{"x", tiles}});
        one.apply("Rj:1a", false);
    }
    for (std::size_t i : s) consume_tile(one, P, i, lf);
    if (!lf) {
        one.apply("R1:g", false);
    } else {
        one.apply("Rg:h:" + last + ":" + last, true);
    }

    ProofTrace tr;
    tr.from = Term::constant("0");
    tr.to = Term::constant("1");
    tr.steps = zero.steps;
    for (auto it = one.steps.rbegin(); it != one.steps.rend(); ++it) {
        TraceStep st = *it;
        st.reversed = !st.reversed;
        tr.steps.push_back(std::move(st));
    }
    std::string why;
    if (!verify_trace(tr, to_equations(b.trs), &why))
        throw Error("internal", "derivation does not replay: " + why);
    return tr;
}

}  // namespace untrs
