#pragma once

#include "untrs/trace.hpp"

namespace untrs {

/// Post correspondence instance: tiles of words over an alphabet of unary
/// symbols. Words are letter sequences, outermost letter first.
struct PcpInstance {
    std::vector<std::string> alphabet;
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
        tiles;
};

/// 1-based tile indices.
using TileSequence = std::vector<std::size_t>;

/// Checks alphabet/tile well-formedness and that the letter names cannot
/// collide with the generated symbols (f, g, h, nil, 0, 1, t<i>, ...).
void validate_instance(const PcpInstance& P, bool allow_empty_words = false);

/// True iff the two concatenations along s agree.
bool verify_solution(const PcpInstance& P, const TileSequence& s);

/// The word u as a term: u = "ab" becomes a(b(tail)), default tail nil.
Term word_term(const std::vector<std::string>& letters);
Term word_term(const std::vector<std::string>& letters, const Term& tail);

/// Linear right-flat system with 0 <->* 1 iff P is solvable; 0 and 1 are
/// its only ground normal forms.
Trs generate_right_flat(const PcpInstance& P, bool allow_empty_words = false);

/// Left-flat counterpart (reversed simulation rules, j/g adapter rules).
Trs generate_left_flat(const PcpInstance& P, bool allow_empty_words = false);

/// The tile-simulation rule block for tile i (1-based) of the right-flat
/// system, in emission order.
std::vector<Rule> right_flat_tile_rules(const PcpInstance& P, std::size_t i);

enum class PcpVariant { right_flat, left_flat };

/// The explicit 0 <->* 1 proof induced by a solution s, replayable against
/// to_equations(generate_*(P)). Throws not-a-solution otherwise.
ProofTrace solution_derivation(const PcpInstance& P, const TileSequence& s,
                               PcpVariant variant);

}  // namespace untrs
