#pragma once

#include <functional>

#include "json.hpp"
#include "untrs/closure.hpp"

namespace untrs {

struct TraceStep {
    Position pos;
    int eq = -1;
    bool reversed = false;  // false: lhs -> rhs at pos; true: rhs -> lhs
    Subst subst;
};

/// Equational proof of from = to, each step an instance of an equation
/// from some EquationSet applied at a position.
struct ProofTrace {
    Term from;
    Term to;
    std::vector<TraceStep> steps;
    bool lowered = false;  // true once every step uses a FromRule equation
};

/// Replays the trace against E. On failure returns false and, if `why` is
/// given, a human-readable reason.
bool verify_trace(const ProofTrace& tr, const EquationSet& E,
                  std::string* why = nullptr);

/// Expands every derived-equation step into FromRule steps by walking the
/// equations' provenance. Throws invalid-trace if the trace does not replay.
ProofTrace lower_trace(const ProofTrace& tr, const EquationSet& E);

nlohmann::json trace_to_json(const ProofTrace& tr);

/// Inverse of trace_to_json; terms are read back with `parse`.
ProofTrace trace_from_json(const nlohmann::json& j,
                           const std::function<Term(const std::string&)>& parse);

}  // namespace untrs
