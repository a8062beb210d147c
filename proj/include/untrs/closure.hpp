#pragma once

#include "untrs/trs.hpp"

namespace untrs {

enum class EqOrigin {
    FromRule,  // lhs = rhs of an input rule
    Infer1,    // paramodulation at the root: from g=d, l=r with mgu(l,g)=s, conclude ds=rs
    Infer2,    // from x=d, y=r with y a variable and x a variable or constant: d = r{y->x}
    Infer3,    // constant replacement: from g=d and a=b, replace one occurrence of a in g
};

struct Equation {
    int id = -1;
    Term lhs;
    Term rhs;

    EqOrigin origin = EqOrigin::FromRule;
    int rule_id = -1;  // FromRule only
    int p1 = -1;       // premise equation ids (derived origins)
    int p2 = -1;
    Term mid;      // Infer1: gs (the shared instance); Infer2: x; Infer3: g before replacement
    Position occ;  // Infer3: the replaced occurrence
};

struct EquationSet {
    std::vector<Equation> eqs;  // id == index
};

/// The equations of R's rules, in rule order, trivial rules (l == r) dropped.
EquationSet to_equations(const Trs& R);

/// Closure of flat equations under the three inference rules above, with
/// both orientations of every premise. Deduplication is up to renaming and
/// orientation, so the input equations keep their ids and only genuinely
/// new equations are appended. Throws not-flat on non-flat input and
/// cap-exceeded past `cap` equations.
EquationSet saturate(const EquationSet& E, std::size_t cap = 100000);

EquationSet closure_of(const Trs& R, std::size_t cap = 100000);

/// Key identifying an equation up to renaming and orientation.
std::pair<Term, Term> canonical_eq_key(const Term& lhs, const Term& rhs);

}  // namespace untrs
