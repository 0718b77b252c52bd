#pragma once

#include "omegasynth/automata.hpp"

namespace omegasynth {

/// Which first-step restriction a triplet NFA applies to transitions leaving
/// state i: none, only rejecting, or only accepting.
enum class TripletKind { All, Rej, Acc };

/// One NFA of the decomposition of a transition-based NBA for a state pair
/// (i, j). The NFA recognises the nonempty words whose runs start in i and
/// end on their first arrival at j; `copy_state` is the fresh duplicate of j
/// without outgoing transitions that makes the first-arrival cut structural.
struct Triplet {
  StateId i = 0;
  StateId j = 0;
  TripletKind kind = TripletKind::All;
  Nfa nfa;
  StateId copy_state = 0;
};

/// Builds the triplet NFA for (i, j, kind): every transition into j is
/// redirected to the copy state, then for Rej/Acc the accepting/rejecting
/// transitions out of i are removed (after redirection). No pruning.
Triplet build_nfa(const Nba& b, StateId i, StateId j, TripletKind kind);

/// Subset simulation: true iff some run of `w` from an initial state ends in
/// an accepting state.
bool membership(const Nfa& a, const Word& w);

const char* to_string(TripletKind k);

}  // namespace omegasynth
