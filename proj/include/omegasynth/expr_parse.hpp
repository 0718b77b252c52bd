#pragma once

#include <string>

#include "omegasynth/expr.hpp"

namespace omegasynth {

/// Concrete syntax: single-character symbols juxtapose (ab = a then b),
/// multi-character symbols are double-quoted; `+` union, `*` star, `^w`
/// omega iteration, `%e` epsilon, `%0` the empty language, parentheses for
/// grouping. Star and `^w` bind tightest, then concatenation, then union.
/// Throws SyntaxError with a byte offset.
Regex parse_regex(const std::string& text);
OmegaRegex parse_omega(const std::string& text);

}  // namespace omegasynth
