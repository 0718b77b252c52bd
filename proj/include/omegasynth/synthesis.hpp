#pragma once

#include <optional>

#include "omegasynth/automata.hpp"
#include "omegasynth/deadline.hpp"
#include "omegasynth/elimination.hpp"
#include "omegasynth/expr.hpp"
#include "omegasynth/simplify.hpp"

namespace omegasynth {

enum class SynthesisMethod { TransitionDirect, StateBased, AutoSelect };

/// Per-run record: which route ran, the expression (raw, plus the simplified
/// form when simplification was requested), metrics for both, the number of
/// (initial, accepting) pairs before empty terms were dropped, and timings.
struct SynthesisReport {
  SynthesisMethod method = SynthesisMethod::TransitionDirect;  // route that ran
  bool auto_selected = false;
  OmegaRegex expression;
  std::optional<OmegaRegex> simplified;
  Metrics metrics;
  std::optional<Metrics> metrics_simplified;
  long long pair_count = 0;
  double elapsed_ms = 0.0;
  double synthesis_ms = 0.0;
  double simplify_ms = 0.0;
  double metrics_ms = 0.0;
  bool simplify_capped = false;
  int states = 0;
  int accepting_count = 0;  // |F~| or |F| of the automaton synthesized from
};

/// Direct synthesis from a transition-based NBA: for every initial state q0
/// and every accepting-source state q, the term
///   R(A_{q0 q,all}) . ((R(A_{qq,rej}))* . R(A_{qq,acc}))^w
/// (prefix omitted when q = q0), all terms joined by union. Expects a
/// trimmed automaton.
OmegaRegex synthesize_transition(const Nba& b,
                                 EliminationOrder order = EliminationOrder::LowestIndexFirst,
                                 const Deadline& deadline = Deadline::never());

/// Baseline synthesis from a state-based NBA: for every initial q0 and
/// accepting q, R(A_{q0 q}) . (R(A_{qq}))^w with the same copy-state
/// construction (which also realizes the epsilon exclusion of the loop
/// language). Expects a trimmed automaton.
OmegaRegex synthesize_state_based(const Nba& b,
                                  EliminationOrder order = EliminationOrder::LowestIndexFirst,
                                  const Deadline& deadline = Deadline::never());

/// Mitigation heuristic: degeneralizes internally and runs the transition
/// route only when it has strictly fewer accepting sources than the
/// state-based automaton has accepting states; otherwise runs the
/// state-based route on the degeneralization.
SynthesisReport auto_select(const Nba& b_trans,
                            EliminationOrder order = EliminationOrder::LowestIndexFirst,
                            const Deadline& deadline = Deadline::never());

/// Full driver used by the CLI and benchmarks. For AutoSelect the input must
/// be transition-based; otherwise the input's acceptance kind must match the
/// method. Each phase (synthesis, simplification, metrics) gets its own
/// budget of `phase_timeout_secs`; negative means unlimited.
SynthesisReport synthesize_report(const Nba& b, SynthesisMethod method,
                                  EliminationOrder order = EliminationOrder::LowestIndexFirst,
                                  bool apply_simplify = false,
                                  const RuleSet& rules = RuleSet::defaults(),
                                  double phase_timeout_secs = -1.0);

const char* to_string(SynthesisMethod m);

}  // namespace omegasynth
