#pragma once

#include <string>

#include "omegasynth/automata.hpp"

namespace omegasynth {

/// Parses the HOA v1 Buchi subset: header items HOA/States/Start/AP/
/// acc-name/Acceptance, explicit labeled body, acceptance marks either on
/// edges (transition-based) or on states (state-based), no aliases.
/// Each distinct edge label formula becomes one opaque alphabet symbol; its
/// display text is the formula with AP indices replaced by AP names.
/// Throws ParseError (with line number) or UnsupportedAcceptanceError.
Nba parse_hoa(const std::string& text);

/// Emits HOA v1 that parse_hoa maps back to an isomorphic automaton (same
/// state numbering). One atomic proposition per alphabet symbol.
std::string emit_hoa(const Nba& b);

/// Debug dump of an NFA in the same HOA dialect; accepting states carry the
/// state marks, so parse_hoa reads it back as a state-based NBA.
std::string emit_hoa(const Nfa& a);

}  // namespace omegasynth
