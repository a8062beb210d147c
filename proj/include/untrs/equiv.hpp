#pragma once

#include "untrs/trace.hpp"

namespace untrs {

struct EquivResult {
    bool equivalent = false;
    ProofTrace trace;  // meaningful only when equivalent
};

/// Decides s <->* t for a flat TRS by saturating a relation over the
/// finite universe of subterms of s and t plus the relevant constants.
/// Variables of s and t are treated rigidly (as fresh constants). On
/// success the trace replays against closure_of(R).
EquivResult decide_equiv(const Term& s, const Term& t, const Trs& R);

/// Same, with a precomputed closure (must be closure_of(R)).
EquivResult decide_equiv_with(const Term& s, const Term& t, const Trs& R,
                              const EquationSet& Ehat);

/// Bidirectional search over <-> restricted to terms of size <= size_cap,
/// expanding at most step_cap terms per side. Variables are rigid. Returns
/// true iff the two searches meet; false may also mean "not found within
/// the caps".
bool oracle_equiv(const Term& s, const Term& t, const Trs& R,
                  std::size_t size_cap, std::size_t step_cap);

}  // namespace untrs
