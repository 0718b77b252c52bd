#include "omegasynth/decompose.hpp"

#include <stdexcept>

namespace omegasynth {

Triplet build_nfa(const Nba& b, StateId i, StateId j, TripletKind kind) {
  if (b.acceptance_kind != AcceptanceKind::TransitionBased)
    throw std::invalid_argument("build_nfa: requires transition-based acceptance");
  if (i < 0 || i >= b.num_states || j < 0 || j >= b.num_states)
    throw std::invalid_argument("build_nfa: invalid state id");

  StateId copy = b.num_states;  // j', no outgoing transitions
  std::vector<Transition> delta;
  delta.reserve(b.transitions.size());
  for (const auto& t : b.transitions) {
    Transition d = t;
    if (t.dst == j) d.dst = copy;
    // The Rej/Acc filters act on the redirected relation, so an accepting
    // (i,t,j) is dropped/kept as the accepting (i,t,j').
    if (d.src == i) {
      if (kind == TripletKind::Rej && d.accepting) continue;
      if (kind == TripletKind::Acc && !d.accepting) continue;
    }
    d.accepting = false;
    delta.push_back(d);
  }

  Triplet out;
  out.i = i;
  out.j = j;
  out.kind = kind;
  out.copy_state = copy;
  out.nfa.num_states = b.num_states + 1;
  out.nfa.alphabet = b.alphabet;
  out.nfa.transitions = std::move(delta);
  out.nfa.initial = {i};
  out.nfa.accepting = {copy};
  return out;
}

bool membership(const Nfa& a, const Word& w) {
  for (SymbolId s : w)
    if (s < 0 || s >= static_cast<SymbolId>(a.alphabet.size()))
      throw std::invalid_argument("membership: unknown symbol " + std::to_string(s));

  std::vector<bool> cur(a.num_states, false);
  for (StateId q : a.initial) cur[q] = true;
  for (SymbolId s : w) {
    std::vector<bool> next(a.num_states, false);
    bool any = false;
    for (const auto& t : a.transitions) {
      if (t.sym == s && cur[t.src]) {
        next[t.dst] = true;
        any = true;
      }
    }
    if (!any) return false;
    cur = std::move(next);
  }
  for (StateId q : a.accepting)
    if (cur[q]) return true;
  return false;
}

const char* to_string(TripletKind k) {
  switch (k) {
    case TripletKind::All: return "all";
    case TripletKind::Rej: return "rej";
    case TripletKind::Acc: return "acc";
  }
  return "?";
}

}  // namespace omegasynth
