#pragma once

#include "untrs/pcp.hpp"
#include "untrs/trs.hpp"

namespace untrs {

/// TRS file format: `#` comments; optional `sig name/arity ...` lines;
/// optional `vars x y ...` lines; rules as `lhs -> rhs` (or prefixed
/// `rule:`). Identifiers declared in `vars` are variables everywhere;
/// arities are inferred from first use and enforced thereafter.
Trs parse_trs(const std::string& text);

/// A single term; variables and arities are taken from R.
Term parse_term(const std::string& text, const Trs& R);

/// Canonical file form; parse_trs(print_trs(R)) == R.
std::string print_trs(const Trs& R);

/// PCP file format: `alphabet: a b` line, then `tile: u / v` lines with
/// words as letter strings; `#` comments.
PcpInstance parse_pcp(const std::string& text);

std::string print_pcp(const PcpInstance& P);

}  // namespace untrs
