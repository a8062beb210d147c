#include "untrs/term.hpp"

#include <algorithm>
#include <sstream>

namespace untrs {

Term Term::var(std::string name) {
    Term t;
    t.var_ = true;
    t.name_ = std::move(name);
    return t;
}

Term Term::app(std::string name, std::vector<Term> args) {
    Term t;
    t.var_ = false;
    t.name_ = std::move(name);
    t.args_ = std::move(args);
    return t;
}

std::size_t term_size(const Term& t) {
    std::size_t n = 1;
    for (const Term& a : t.args()) n += term_size(a);
    return n;
}

std::size_t term_height(const Term& t) {
    std::size_t h = 0;
    for (const Term& a : t.args()) h = std::max(h, 1 + term_height(a));
    return h;
}

bool is_ground(const Term& t) {
    if (t.is_var()) return false;
    for (const Term& a : t.args())
        if (!is_ground(a)) return false;
    return true;
}

bool is_flat(const Term& t) { return term_height(t) <= 1; }

namespace {
bool shallow_rec(const Term& t, std::size_t depth) {
    if (t.is_var()) return depth <= 1;
    for (const Term& a : t.args())
        if (!shallow_rec(a, depth + 1)) return false;
    return true;
}
}  // namespace

bool is_shallow(const Term& t) { return shallow_rec(t, 0); }

const Term& subterm_at(const Term& t, const Position& p) {
    const Term* cur = &t;
    for (std::size_t k : p) {
        if (k >= cur->args().size())
            throw Error("invalid-position",
                        "position " + to_string(p) + " not valid for " + to_string(t));
        cur = &cur->args()[k];
    }
    return *cur;
}

Term replace_at(const Term& t, const Position& p, const Term& s) {
    if (p.empty()) return s;
    std::size_t k = p.front();
    if (k >= t.args().size())
        throw Error("invalid-position",
                    "position " + to_string(p) + " not valid for " + to_string(t));
    std::vector<Term> args = t.args();
    args[k] = replace_at(args[k], Position(p.begin() + 1, p.end()), s);
    return Term::app(t.name(), std::move(args));
}

namespace {
void positions_rec(const Term& t, Position& cur, std::vector<Position>& out) {
    out.push_back(cur);
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        cur.push_back(i);
        positions_rec(t.args()[i], cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Position> positions_of(const Term& t) {
    std::vector<Position> out;
    Position cur;
    positions_rec(t, cur, out);
    return out;
}

void collect_vars(const Term& t, std::set<std::string>& out) {
    if (t.is_var()) {
        out.insert(t.name());
        return;
    }
    for (const Term& a : t.args()) collect_vars(a, out);
}

std::set<std::string> vars_of(const Term& t) {
    std::set<std::string> out;
    collect_vars(t, out);
    return out;
}

void collect_subterms(const Term& t, std::set<Term>& out) {
    out.insert(t);
    for (const Term& a : t.args()) collect_subterms(a, out);
}

void collect_constants(const Term& t, std::set<Term>& out) {
    if (t.is_const()) out.insert(t);
    for (const Term& a : t.args()) collect_constants(a, out);
}

Term apply_subst(const Term& t, const Subst& sigma) {
    if (t.is_var()) {
        auto it = sigma.find(t.name());
        return it == sigma.end() ? t : it->second;
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(apply_subst(a, sigma));
    return Term::app(t.name(), std::move(args));
}

namespace {
bool match_rec(const Term& pat, const Term& sub, Subst& sigma) {
    if (pat.is_var()) {
        auto [it, fresh] = sigma.emplace(pat.name(), sub);
        return fresh || it->second == sub;
    }
    if (sub.is_var() || pat.name() != sub.name() ||
        pat.args().size() != sub.args().size())
        return false;
    for (std::size_t i = 0; i < pat.args().size(); ++i)
        if (!match_rec(pat.args()[i], sub.args()[i], sigma)) return false;
    return true;
}
}  // namespace

std::optional<Subst> match_term(const Term& pattern, const Term& subject) {
    Subst sigma;
    if (!match_rec(pattern, subject, sigma)) return std::nullopt;
    return sigma;
}

std::optional<Subst> match_pair(const Term& pat1, const Term& sub1,
                                const Term& pat2, const Term& sub2) {
    Subst sigma;
    if (!match_rec(pat1, sub1, sigma)) return std::nullopt;
    if (!match_rec(pat2, sub2, sigma)) return std::nullopt;
    return sigma;
}

namespace {
bool occurs(const std::string& x, const Term& t, const Subst& sigma) {
    if (t.is_var()) {
        if (t.name() == x) return true;
        auto it = sigma.find(t.name());
        return it != sigma.end() && occurs(x, it->second, sigma);
    }
    for (const Term& a : t.args())
        if (occurs(x, a, sigma)) return true;
    return false;
}

// Walk a variable chain to its current binding.
const Term& resolve(const Term& t, const Subst& sigma) {
    const Term* cur = &t;
    while (cur->is_var()) {
        auto it = sigma.find(cur->name());
        if (it == sigma.end()) break;
        cur = &it->second;
    }
    return *cur;
}

bool unify_rec(const Term& s, const Term& t, Subst& sigma) {
    const Term& a = resolve(s, sigma);
    const Term& b = resolve(t, sigma);
    if (a.is_var()) {
        if (b.is_var() && b.name() == a.name()) return true;
        if (occurs(a.name(), b, sigma)) return false;
        sigma[a.name()] = b;
        return true;
    }
    if (b.is_var()) {
        if (occurs(b.name(), a, sigma)) return false;
        sigma[b.name()] = a;
        return true;
    }
    if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
    // resolve() returns references into sigma; copy args before recursing.
    std::vector<Term> aa = a.args(), ba = b.args();
    for (std::size_t i = 0; i < aa.size(); ++i)
        if (!unify_rec(aa[i], ba[i], sigma)) return false;
    return true;
}
}  // namespace

std::optional<Subst> unify(const Term& s, const Term& t) {
    Subst bindings;
    if (!unify_rec(s, t, bindings)) return std::nullopt;
    Subst resolved;
    for (const auto& [x, _] : bindings) {
        Term r = resolve(Term::var(x), bindings);
        resolved[x] = apply_subst(r, bindings);
        // fully resolve nested bindings
        Term prev;
        while (!(prev == resolved[x])) {
            prev = resolved[x];
            resolved[x] = apply_subst(prev, bindings);
        }
    }
    return resolved;
}

namespace {
void canon_rec(const Term& t, Subst& ren, std::size_t& next, Term& out) {
    if (t.is_var()) {
        auto it = ren.find(t.name());
        if (it == ren.end()) {
            Term v = Term::var("v" + std::to_string(next++));
            it = ren.emplace(t.name(), v).first;
        }
        out = it->second;
        return;
    }
    std::vector<Term> args(t.args().size());
    for (std::size_t i = 0; i < t.args().size(); ++i)
        canon_rec(t.args()[i], ren, next, args[i]);
    out = Term::app(t.name(), std::move(args));
}
}  // namespace

Term canonical_rename(const Term& t) {
    Subst ren;
    std::size_t next = 0;
    Term out;
    canon_rec(t, ren, next, out);
    return out;
}

std::pair<Term, Term> canonical_rename(const Term& s, const Term& t) {
    Subst ren;
    std::size_t next = 0;
    Term a, b;
    canon_rec(s, ren, next, a);
    canon_rec(t, ren, next, b);
    return {a, b};
}

std::string to_string(const Term& t) {
    if (t.args().empty()) return t.name();
    std::string out = t.name();
    out += '(';
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ',';
        out += to_string(t.args()[i]);
    }
    out += ')';
    return out;
}

std::string to_string(const Position& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(p[i]);
    }
    out += ']';
    return out;
}

}  // namespace untrs
