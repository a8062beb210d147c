#pragma once

#include <utility>

#include "untrs/term.hpp"

namespace untrs {

struct Rule {
    int id = -1;
    Term lhs;
    Term rhs;
};

bool is_flat(const Rule& r);
bool is_shallow(const Rule& r);
bool is_collapsing(const Rule& r);
bool is_linear(const Rule& r);

struct Trs {
    std::map<std::string, std::size_t> signature;  // name -> arity
    std::vector<Rule> rules;
    std::set<std::string> declared_vars;

    bool flat() const;
    bool shallow() const;

    /// Symbols occurring in the rules (name -> arity).
    std::map<std::string, std::size_t> rule_symbols() const;
    /// Nullary symbols occurring in the rules.
    std::set<std::string> rule_constants() const;
    /// Nullary symbols of the full signature, as terms.
    std::vector<Term> signature_constants() const;
};

/// Position pairs {i = j} where the lhs carries the same variable twice.
struct RulePattern {
    std::set<std::pair<std::size_t, std::size_t>> equations;
};

RulePattern pattern_of(const Rule& rule);

/// Applicability of a flat rule at the root, decided from the rule's
/// pattern and constant positions alone. Agrees with match_term on the lhs.
bool rule_applies_at_root(const Rule& rule, const Term& t);

enum class Direction { forward, symmetric };

struct RewriteStep {
    Position pos;
    int rule_id = -1;
    bool reversed = false;
    Subst sigma;  // over the rule's variables
};

/// One-step successors of t. In symmetric mode rules are also applied
/// right-to-left; variables of the target side that the matched side does
/// not bind are instantiated from `pool` (every combination).
std::vector<std::pair<Term, RewriteStep>> one_step_successors(
    const Term& t, const Trs& R, Direction dir,
    const std::vector<Term>& pool = {});

bool is_normal_form(const Term& t, const Trs& R);

/// Adds 3*alpha fresh constants to the signature (alpha = max arity in the
/// rules, at least 1); rules are untouched.
Trs extend_signature(const Trs& R);

/// Ground normal forms of height <= max_height over R's signature, built
/// bottom-up; ordered by height, then term order. Throws cap-exceeded if
/// more than `cap` normal forms would be produced.
std::vector<Term> enumerate_normal_forms(const Trs& R, std::size_t max_height,
                                         std::size_t cap);

}  // namespace untrs
