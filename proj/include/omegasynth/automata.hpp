#pragma once

#include <set>
#include <string>
#include <vector>

namespace omegasynth {

using StateId = int;
using SymbolId = int;

/// A finite word over an automaton's alphabet, as symbol indices.
using Word = std::vector<SymbolId>;

/// One alphabet entry: index plus its display label.
struct Symbol {
  SymbolId id = 0;
  std::string display;
};

enum class AcceptanceKind { TransitionBased, StateBased };

struct Transition {
  StateId src = 0;
  SymbolId sym = 0;
  StateId dst = 0;
  bool accepting = false;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Nondeterministic Buchi automaton. States are dense ids 0..num_states-1,
/// symbols index into `alphabet`. With transition-based acceptance the per-
/// transition flags carry the acceptance set; with state-based acceptance
/// `accepting_states` does and no transition may be flagged.
struct Nba {
  int num_states = 0;
  std::vector<std::string> alphabet;
  std::vector<Transition> transitions;
  std::set<StateId> initial;
  AcceptanceKind acceptance_kind = AcceptanceKind::TransitionBased;
  std::set<StateId> accepting_states;

  /// Throws std::invalid_argument when an invariant is broken.
  void validate() const;
};

/// Finite automaton over the same alphabet representation. Transition
/// accepting flags are unused and kept false.
struct Nfa {
  int num_states = 0;
  std::vector<std::string> alphabet;
  std::vector<Transition> transitions;
  std::set<StateId> initial;
  std::set<StateId> accepting;
};

/// States with at least one outgoing accepting transition (the F~ of a
/// transition-based NBA). Requires transition-based acceptance.
std::set<StateId> accepting_source_states(const Nba& b);

/// Converts a state-based NBA to a transition-based one over the same
/// states: a transition is accepting iff its source is an accepting state.
Nba lift_state_based(const Nba& b);

/// Converts a transition-based NBA to a state-based one by tracking whether
/// the previous transition was accepting (two copies of every state, the
/// unreachable part pruned). At most doubles the state count.
Nba degeneralize(const Nba& b);

/// Removes states unreachable from the initial set, renumbering the rest in
/// ascending order. Language-preserving.
Nba trim(const Nba& b);

}  // namespace omegasynth
