#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace untrs {

/// Library error with a stable machine-readable code.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct Symbol {
    std::string name;
    std::size_t arity = 0;

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// First-order term: a variable or a function application.
/// Variables and nullary applications are distinguished by the `var` flag;
/// which identifiers are variables is decided by the enclosing file/context.
class Term {
public:
    Term() = default;

    static Term var(std::string name);
    static Term app(std::string name, std::vector<Term> args = {});
    static Term constant(std::string name) { return app(std::move(name)); }

    bool is_var() const { return var_; }
    bool is_app() const { return !var_; }
    bool is_const() const { return !var_ && args_.empty(); }

    const std::string& name() const { return name_; }
    const std::vector<Term>& args() const { return args_; }

    friend bool operator==(const Term&, const Term&) = default;
    // written out because a defaulted <=> cannot recurse into args_
    friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
        if (auto c = a.var_ <=> b.var_; c != 0) return c;
        if (auto c = a.name_ <=> b.name_; c != 0) return c;
        return std::lexicographical_compare_three_way(
            a.args_.begin(), a.args_.end(), b.args_.begin(), b.args_.end());
    }

private:
    bool var_ = false;
    std::string name_;
    std::vector<Term> args_;
};

/// Zero-based child indices; the empty sequence addresses the root.
using Position = std::vector<std::size_t>;

/// Finite map from variable names to terms; identity elsewhere.
using Subst = std::map<std::string, Term>;

std::size_t term_size(const Term& t);
std::size_t term_height(const Term& t);
bool is_ground(const Term& t);
bool is_flat(const Term& t);
bool is_shallow(const Term& t);

const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& s);

/// All positions of t in pre-order (root first, children left to right).
std::vector<Position> positions_of(const Term& t);

void collect_vars(const Term& t, std::set<std::string>& out);
std::set<std::string> vars_of(const Term& t);
void collect_subterms(const Term& t, std::set<Term>& out);
void collect_constants(const Term& t, std::set<Term>& out);

Term apply_subst(const Term& t, const Subst& sigma);

/// Syntactic matching: on success pattern*sigma == subject.
std::optional<Subst> match_term(const Term& pattern, const Term& subject);

/// Joint matching of two patterns under one substitution.
std::optional<Subst> match_pair(const Term& pat1, const Term& sub1,
                                const Term& pat2, const Term& sub2);

/// Most general unifier with occurs check; bindings fully resolved,
/// variables processed left to right for a deterministic result.
std::optional<Subst> unify(const Term& s, const Term& t);

/// Variables renamed v0,v1,... in first-occurrence order; idempotent.
Term canonical_rename(const Term& t);
std::pair<Term, Term> canonical_rename(const Term& s, const Term& t);

std::string to_string(const Term& t);
std::string to_string(const Position& p);

}  // namespace untrs
