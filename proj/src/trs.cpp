#include "untrs/trs.hpp"

#include <algorithm>
#include <functional>

namespace untrs {

bool is_flat(const Rule& r) { return is_flat(r.lhs) && is_flat(r.rhs); }
bool is_shallow(const Rule& r) { return is_shallow(r.lhs) && is_shallow(r.rhs); }
bool is_collapsing(const Rule& r) { return r.rhs.is_var(); }

namespace {
bool linear_side(const Term& t) {
    std::map<std::string, int> counts;
    std::vector<const Term*> stack{&t};
    while (!stack.empty()) {
        const Term* cur = stack.back();
        stack.pop_back();
        if (cur->is_var() && ++counts[cur->name()] > 1) return false;
        for (const Term& a : cur->args()) stack.push_back(&a);
    }
    return true;
}
}  // namespace

bool is_linear(const Rule& r) { return linear_side(r.lhs) && linear_side(r.rhs); }

bool Trs::flat() const {
    return std::all_of(rules.begin(), rules.end(),
                       [](const Rule& r) { return is_flat(r); });
}

bool Trs::shallow() const {
    return std::all_of(rules.begin(), rules.end(),
                       [](const Rule& r) { return is_shallow(r); });
}

namespace {
void collect_symbols(const Term& t, std::map<std::string, std::size_t>& out) {
    if (t.is_var()) return;
    out[t.name()] = t.args().size();
    for (const Term& a : t.args()) collect_symbols(a, out);
}
}  // namespace

std::map<std::string, std::size_t> Trs::rule_symbols() const {
    std::map<std::string, std::size_t> out;
    for (const Rule& r : rules) {
        collect_symbols(r.lhs, out);
        collect_symbols(r.rhs, out);
    }
    return out;
}

std::set<std::string> Trs::rule_constants() const {
    std::set<std::string> out;
    for (const auto& [name, arity] : rule_symbols())
        if (arity == 0) out.insert(name);
    return out;
}

std::vector<Term> Trs::signature_constants() const {
    std::vector<Term> out;
    for (const auto& [name, arity] : signature)
        if (arity == 0) out.push_back(Term::constant(name));
    return out;
}

RulePattern pattern_of(const Rule& rule) {
    RulePattern p;
    const auto& args = rule.lhs.args();
    for (std::size_t i = 0; i < args.size(); ++i)
        for (std::size_t j = i + 1; j < args.size(); ++j)
            if (args[i].is_var() && args[i] == args[j]) p.equations.insert({i, j});
    return p;
}

bool rule_applies_at_root(const Rule& rule, const Term& t) {
    if (!is_flat(rule))
        throw Error("not-flat", "rule_applies_at_root requires a flat rule");
    const Term& l = rule.lhs;
    if (l.is_const()) return l == t;
    if (t.is_var() || t.name() != l.name() || t.args().size() != l.args().size())
        return false;
    for (std::size_t i = 0; i < l.args().size(); ++i)
        if (l.args()[i].is_const() && !(l.args()[i] == t.args()[i])) return false;
    for (const auto& [i, j] : pattern_of(rule).equations)
        if (!(t.args()[i] == t.args()[j])) return false;
    return true;
}

namespace {
// Every way of instantiating `extra` variables from `pool`, on top of sigma.
void with_pool_instances(const std::vector<std::string>& extra,
                         const std::vector<Term>& pool, Subst sigma,
                         std::size_t idx,
                         const std::function<void(const Subst&)>& emit) {
    if (idx == extra.size()) {
        emit(sigma);
        return;
    }
    for (const Term& cand : pool) {
        sigma[extra[idx]] = cand;
        with_pool_instances(extra, pool, sigma, idx + 1, emit);
    }
}

void apply_side(const Term& t, const Position& pos, const Term& from,
                const Term& to, int rule_id, bool reversed,
                const std::vector<Term>& pool,
                std::vector<std::pair<Term, RewriteStep>>& out) {
    const Term& sub = subterm_at(t, pos);
    auto sigma = match_term(from, sub);
    if (!sigma) return;
    std::vector<std::string> extra;
    for (const std::string& x : vars_of(to))
        if (!sigma->count(x)) extra.push_back(x);
    auto emit = [&](const Subst& s) {
        out.push_back({replace_at(t, pos, apply_subst(to, s)),
                       RewriteStep{pos, rule_id, reversed, s}});
    };
    if (extra.empty()) {
        emit(*sigma);
    } else {
        with_pool_instances(extra, pool, *sigma, 0, emit);
    }
}
}  // namespace

std::vector<std::pair<Term, RewriteStep>> one_step_successors(
    const Term& t, const Trs& R, Direction dir, const std::vector<Term>& pool) {
    std::vector<std::pair<Term, RewriteStep>> out;
    for (const Position& pos : positions_of(t)) {
        for (const Rule& r : R.rules) {
            apply_side(t, pos, r.lhs, r.rhs, r.id, false, pool, out);
            if (dir == Direction::symmetric)
                apply_side(t, pos, r.rhs, r.lhs, r.id, true, pool, out);
        }
    }
    return out;
}

bool is_normal_form(const Term& t, const Trs& R) {
    for (const Position& pos : positions_of(t)) {
        const Term& sub = subterm_at(t, pos);
        for (const Rule& r : R.rules)
            if (match_term(r.lhs, sub)) return false;
    }
    return true;
}

Trs extend_signature(const Trs& R) {
    std::size_t alpha = 1;
    for (const auto& [name, arity] : R.rule_symbols()) alpha = std::max(alpha, arity);
    Trs out = R;
    for (std::size_t i = 0; i < 3 * alpha; ++i) {
        std::string name = "_k" + std::to_string(i);
        while (out.signature.count(name) || out.declared_vars.count(name))
            name = "_" + name;
        out.signature[name] = 0;
    }
    return out;
}

namespace {
bool reducible_at_root(const Term& t, const Trs& R) {
    for (const Rule& r : R.rules)
        if (match_term(r.lhs, t)) return true;
    return false;
}

void arg_tuples(const std::vector<Term>& choices, std::size_t arity,
                std::vector<Term>& cur,
                const std::function<void(const std::vector<Term>&)>& emit) {
    if (cur.size() == arity) {
        emit(cur);
        return;
    }
    for (const Term& c : choices) {
        cur.push_back(c);
        arg_tuples(choices, arity, cur, emit);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Term> enumerate_normal_forms(const Trs& R, std::size_t max_height,
                                         std::size_t cap) {
    std::vector<std::vector<Term>> layers;  // by exact height
    std::size_t total = 0;
    auto push = [&](std::vector<Term>& layer, Term t) {
        if (++total > cap)
            throw Error("cap-exceeded",
                        "normal form enumeration exceeded cap of " +
                            std::to_string(cap) + " (partial count " +
                            std::to_string(total - 1) + ")");
        layer.push_back(std::move(t));
    };

    std::vector<Term> base;
    for (const auto& [name, arity] : R.signature)
        if (arity == 0 && !reducible_at_root(Term::constant(name), R))
            push(base, Term::constant(name));
    std::sort(base.begin(), base.end());
    layers.push_back(std::move(base));

    std::vector<Term> lower = layers[0];  // all NFs of height < h
    for (std::size_t h = 1; h <= max_height; ++h) {
        std::vector<Term> layer;
        for (const auto& [name, arity] : R.signature) {
            if (arity == 0) continue;
            std::vector<Term> cur;
            arg_tuples(lower, arity, cur, [&](const std::vector<Term>& args) {
                bool tall = false;  // at least one arg of height h-1
                for (const Term& a : args)
                    if (term_height(a) == h - 1) tall = true;
                if (!tall) return;
                Term cand = Term::app(name, args);
                if (!reducible_at_root(cand, R)) push(layer, std::move(cand));
            });
        }
        std::sort(layer.begin(), layer.end());
        if (layer.empty()) break;  // nothing taller can be built
        lower.insert(lower.end(), layer.begin(), layer.end());
        layers.push_back(std::move(layer));
    }

    std::vector<Term> out;
    for (const auto& layer : layers)
        out.insert(out.end(), layer.begin(), layer.end());
    return out;
}

}  // namespace untrs
