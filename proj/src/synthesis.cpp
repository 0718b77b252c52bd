#include "omegasynth/synthesis.hpp"

#include <chrono>
#include <stdexcept>

#include "omegasynth/decompose.hpp"

namespace omegasynth {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

Regex triplet_regex(const Nba& b, StateId i, StateId j, TripletKind kind,
                    EliminationOrder order, const Deadline& deadline) {
  return nfa_to_regex(build_nfa(b, i, j, kind).nfa, order, deadline);
}

}  // namespace

OmegaRegex synthesize_transition(const Nba& b, EliminationOrder order,
                                 const Deadline& deadline) {
  if (b.acceptance_kind != AcceptanceKind::TransitionBased)
    throw std::invalid_argument("synthesize_transition: requires transition-based acceptance");

  std::set<StateId> ftilde = accepting_source_states(b);
  OmegaRegex expression = make_empty_omega();
  for (StateId q0 : b.initial) {
    for (StateId q : ftilde) {
      deadline.check("synthesis");
      Regex rej = triplet_regex(b, q, q, TripletKind::Rej, order, deadline);
      Regex acc = triplet_regex(b, q, q, TripletKind::Acc, order, deadline);
      OmegaRegex loop = make_omega_iter(make_concat(make_star(std::move(rej)), std::move(acc)));
      OmegaRegex term;
      if (q != q0) {
        Regex all = triplet_regex(b, q0, q, TripletKind::All, order, deadline);
        term = make_concat_fin(std::move(all), std::move(loop));
      } else {
        term = std::move(loop);
      }
      expression = make_union_omega(std::move(expression), std::move(term));
    }
  }
  return expression;
}

OmegaRegex synthesize_state_based(const Nba& b, EliminationOrder order,
                                  const Deadline& deadline) {
  if (b.acceptance_kind != AcceptanceKind::StateBased)
    throw std::invalid_argument("synthesize_state_based: requires state-based acceptance");

  // The All triplet ignores acceptance flags, so lifting only satisfies the
  // construction's precondition; first-arrival segments between consecutive
  // visits of q recover the full loop language under omega iteration.
  Nba lifted = lift_state_based(b);
  OmegaRegex expression = make_empty_omega();
  for (StateId q0 : b.initial) {
    for (StateId q : b.accepting_states) {
      deadline.check("synthesis");
      Regex loop_lang = triplet_regex(lifted, q, q, TripletKind::All, order, deadline);
      OmegaRegex loop = make_omega_iter(std::move(loop_lang));
      OmegaRegex term;
      if (q != q0) {
        Regex prefix = triplet_regex(lifted, q0, q, TripletKind::All, order, deadline);
        term = make_concat_fin(std::move(prefix), std::move(loop));
      } else {
        term = std::move(loop);
      }
      expression = make_union_omega(std::move(expression), std::move(term));
    }
  }
  return expression;
}

SynthesisReport auto_select(const Nba& b_trans, EliminationOrder order,
                            const Deadline& deadline) {
  if (b_trans.acceptance_kind != AcceptanceKind::TransitionBased)
    throw std::invalid_argument("auto_select: requires transition-based acceptance");
  auto t0 = std::chrono::steady_clock::now();

  Nba state_form = degeneralize(b_trans);
  size_t ftilde = accepting_source_states(b_trans).size();
  size_t f = state_form.accepting_states.size();

  SynthesisReport report;
  report.auto_selected = true;
  if (ftilde < f) {
    report.method = SynthesisMethod::TransitionDirect;
    report.expression = synthesize_transition(b_trans, order, deadline);
    report.pair_count = static_cast<long long>(b_trans.initial.size()) *
                        static_cast<long long>(ftilde);
    report.states = b_trans.num_states;
    report.accepting_count = static_cast<int>(ftilde);
  } else {
    report.method = SynthesisMethod::StateBased;
    report.expression = synthesize_state_based(state_form, order, deadline);
    report.pair_count = static_cast<long long>(state_form.initial.size()) *
                        static_cast<long long>(f);
    report.states = state_form.num_states;
    report.accepting_count = static_cast<int>(f);
  }
  report.synthesis_ms = ms_since(t0);

  auto t1 = std::chrono::steady_clock::now();
  report.metrics = metrics(report.expression);
  report.metrics_ms = ms_since(t1);
  report.elapsed_ms = ms_since(t0);
  return report;
}

SynthesisReport synthesize_report(const Nba& b, SynthesisMethod method, EliminationOrder order,
                                  bool apply_simplify, const RuleSet& rules,
                                  double phase_timeout_secs) {
  auto phase_deadline = [&]() {
    return phase_timeout_secs < 0 ? Deadline::never()
                                  : Deadline::after_seconds(phase_timeout_secs);
  };

  SynthesisReport report;
  auto t0 = std::chrono::steady_clock::now();
  if (method == SynthesisMethod::AutoSelect) {
    report = auto_select(b, order, phase_deadline());
  } else {
    report.method = method;
    if (method == SynthesisMethod::TransitionDirect) {
      report.expression = synthesize_transition(b, order, phase_deadline());
      report.accepting_count = static_cast<int>(accepting_source_states(b).size());
    } else {
      report.expression = synthesize_state_based(b, order, phase_deadline());
      report.accepting_count = static_cast<int>(b.accepting_states.size());
    }
    report.pair_count = static_cast<long long>(b.initial.size()) *
                        static_cast<long long>(report.accepting_count);
    report.states = b.num_states;
    report.synthesis_ms = ms_since(t0);
  }

  if (apply_simplify) {
    Deadline dl = phase_deadline();
    dl.check("simplify");
    auto t1 = std::chrono::steady_clock::now();
    SimplifyResult s = simplify(report.expression, rules);
    report.simplified = s.expr;
    report.simplify_capped = s.cap_exceeded;
    report.simplify_ms = ms_since(t1);
  }

  Deadline dl = phase_deadline();
  dl.check("metrics");
  auto t2 = std::chrono::steady_clock::now();
  report.metrics = metrics(report.expression);
  if (report.simplified) report.metrics_simplified = metrics(*report.simplified);
  report.metrics_ms = ms_since(t2);
  report.elapsed_ms = ms_since(t0);
  return report;
}

const char* to_string(SynthesisMethod m) {
  switch (m) {
    case SynthesisMethod::TransitionDirect: return "transition";
    case SynthesisMethod::StateBased: return "state";
    case SynthesisMethod::AutoSelect: return "auto";
  }
  return "?";
}

}  // namespace omegasynth
