#pragma once

#include <optional>

#include "untrs/equiv.hpp"

namespace untrs {

struct FlatteningResult {
    Trs flat_system;
    // introduced constant -> the ground term (over the original signature)
    // it abbreviates
    std::map<std::string, Term> constant_table;
    Trs origin;
};

/// Turns a shallow TRS into a flat one: innermost ground subterms of
/// height >= 1 sitting below the root of a rule side are abbreviated by
/// memoized fresh constants, each with a defining rule t -> c_t.
FlatteningResult flatten(const Trs& R);

/// Replaces introduced constants by the ground terms they abbreviate.
Term unabbreviate(const Term& t, const std::map<std::string, Term>& table);

struct UnWitness {
    Term n0;
    Term n1;
    ProofTrace trace;  // verifies against closure_of(analyzed)
};

struct UnVerdict {
    enum class Status { un_eq, not_un_eq };
    Status status = Status::un_eq;
    std::optional<UnWitness> witness;
    std::size_t bound_k = 0;
    std::size_t nf_count = 0;  // normal forms enumerated before deciding
    Trs analyzed;              // the flattened, signature-extended system
};

struct DecideUnLimits {
    std::size_t nf_cap = 200000;
    std::size_t pair_cap = 2000000;
    std::size_t closure_cap = 100000;
};

/// The main decision procedure: flatten, extend the signature, enumerate
/// ground normal forms of height <= k = max(1, #rule constants) in order
/// of size, and look for two distinct equivalent ones (checked in order of
/// combined size, so reported witnesses are small).
UnVerdict decide_un(const Trs& R, const DecideUnLimits& limits = {});

/// Human-readable report; witness terms are shown both as analyzed and
/// un-abbreviated through the constant table, the trace lowered to
/// original-rule steps.
std::string witness_report(const UnVerdict& v, const FlatteningResult& fr);

/// {"status","k","nf_count","witness"} with the lowered trace.
nlohmann::json verdict_json(const UnVerdict& v, const FlatteningResult& fr);

}  // namespace untrs
