#pragma once

#include "omegasynth/expr.hpp"

namespace omegasynth {

/// Rewrite identities applied by simplify(). Each is language-preserving and
/// never increases rpn. The default set is configurable so alternative tool
/// conventions can be matched.
struct RuleSet {
  bool idempotent_union = false;        // x+x => x (also on omega unions)
  bool absorb_into_star_concat = false; // x+xy* => xy* and xy*+x => xy*
  bool star_star = false;               // (x*)* => x*
  bool epsilon_plus_star = false;       // %e+x* => x* and x*+%e => x*
  bool star_concat_star = false;        // x*x* => x*
  bool omega_absorb_prefix_tail = false;// xyy^w => xy^w (and yy^w => y^w)
  bool omega_star_body = false;         // (x*)^w => x^w for non-nullable x

  static RuleSet defaults() {
    RuleSet r;
    r.idempotent_union = true;
    r.absorb_into_star_concat = true;
    r.star_star = true;
    r.epsilon_plus_star = true;
    r.star_concat_star = true;
    r.omega_absorb_prefix_tail = true;
    r.omega_star_body = true;
    return r;
  }

  static RuleSet none() { return RuleSet{}; }
};

struct SimplifyResult {
  OmegaRegex expr;
  bool cap_exceeded = false;  // returned expression is best-so-far
  int passes = 0;
};

struct SimplifyRegexResult {
  Regex expr;
  bool cap_exceeded = false;
  int passes = 0;
};

/// Applies the rule set bottom-up until a fixed point or until `max_passes`
/// whole-tree passes have run (then cap_exceeded is set on the best-so-far
/// result). The output is language-equivalent to the input and its rpn never
/// exceeds the input's.
SimplifyResult simplify(const OmegaRegex& e, const RuleSet& rules = RuleSet::defaults(),
                        int max_passes = 1000);
SimplifyRegexResult simplify(const Regex& r, const RuleSet& rules = RuleSet::defaults(),
                             int max_passes = 1000);

}  // namespace omegasynth
