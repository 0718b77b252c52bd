#pragma once

#include <string>

#include "omegasynth/automata.hpp"

namespace omegasynth {

/// Native fixture format:
///   {num_states, alphabet:[string], initial:[int],
///    acceptance_kind:"transition"|"state", accepting_states:[int],
///    transitions:[{src,sym,dst,acc:bool}]}
/// Throws SchemaError naming the offending field.
Nba parse_json(const std::string& text);

std::string emit_json(const Nba& b);

/// NFA dump: {num_states, alphabet, initial, accepting,
/// transitions:[{src,sym,dst}]}.
std::string emit_json(const Nfa& a);

}  // namespace omegasynth
