#include "omegasynth/automata.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace omegasynth {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Reachable set from `initial` following transitions forward.
std::vector<bool> reachable_states(int num_states, const std::vector<Transition>& transitions,
                                   const std::set<StateId>& initial) {
  std::vector<std::vector<StateId>> succ(num_states);
  for (const auto& t : transitions) succ[t.src].push_back(t.dst);
  std::vector<bool> seen(num_states, false);
  std::deque<StateId> queue;
  for (StateId q : initial) {
    if (!seen[q]) {
      seen[q] = true;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (StateId d : succ[q]) {
      if (!seen[d]) {
        seen[d] = true;
        queue.push_back(d);
      }
    }
  }
  return seen;
}

}  // namespace

void Nba::validate() const {
  require(num_states >= 0, "negative state count");
  std::unordered_set<std::string> labels;
  for (const auto& l : alphabet) {
    require(!l.empty(), "empty alphabet label");
    require(labels.insert(l).second, "duplicate alphabet label '" + l + "'");
  }
  for (const auto& t : transitions) {
    require(t.src >= 0 && t.src < num_states, "transition source out of range");
    require(t.dst >= 0 && t.dst < num_states, "transition destination out of range");
    require(t.sym >= 0 && t.sym < static_cast<SymbolId>(alphabet.size()),
            "transition symbol out of range");
    if (acceptance_kind == AcceptanceKind::StateBased)
      require(!t.accepting, "state-based NBA with an accepting transition");
  }
  for (StateId q : initial) require(q >= 0 && q < num_states, "initial state out of range");
  if (acceptance_kind == AcceptanceKind::TransitionBased) {
    require(accepting_states.empty(), "transition-based NBA with accepting states");
  } else {
    for (StateId q : accepting_states)
      require(q >= 0 && q < num_states, "accepting state out of range");
  }
}

std::set<StateId> accepting_source_states(const Nba& b) {
  if (b.acceptance_kind != AcceptanceKind::TransitionBased)
    throw std::invalid_argument("accepting_source_states: requires transition-based acceptance");
  std::set<StateId> out;
  for (const auto& t : b.transitions)
    if (t.accepting) out.insert(t.src);
  return out;
}

Nba lift_state_based(const Nba& b) {
  if (b.acceptance_kind != AcceptanceKind::StateBased)
    throw std::invalid_argument("lift_state_based: requires state-based acceptance");
  Nba out = b;
  out.acceptance_kind = AcceptanceKind::TransitionBased;
  out.accepting_states.clear();
  for (auto& t : out.transitions) t.accepting = b.accepting_states.count(t.src) > 0;
  return out;
}

Nba degeneralize(const Nba& b) {
  if (b.acceptance_kind != AcceptanceKind::TransitionBased)
    throw std::invalid_argument("degeneralize: requires transition-based acceptance");

  // Candidate states (q, bit) with id 2q+bit; bit records whether the run
  // just crossed an accepting transition.
  int cand = 2 * b.num_states;
  std::vector<Transition> delta;
  delta.reserve(2 * b.transitions.size());
  for (int bit = 0; bit < 2; ++bit) {
    for (const auto& t : b.transitions) {
      Transition d;
      d.src = 2 * t.src + bit;
      d.sym = t.sym;
      d.dst = 2 * t.dst + (t.accepting ? 1 : 0);
      delta.push_back(d);
    }
  }
  std::set<StateId> init;
  for (StateId q : b.initial) init.insert(2 * q);

  std::vector<bool> seen = reachable_states(cand, delta, init);
  std::vector<StateId> renumber(cand, -1);
  int kept = 0;
  for (int q = 0; q < cand; ++q)
    if (seen[q]) renumber[q] = kept++;

  Nba out;
  out.num_states = kept;
  out.alphabet = b.alphabet;
  out.acceptance_kind = AcceptanceKind::StateBased;
  for (const auto& t : delta) {
    if (!seen[t.src]) continue;
    Transition d = t;
    d.src = renumber[t.src];
    d.dst = renumber[t.dst];
    out.transitions.push_back(d);
  }
  for (StateId q : init) out.initial.insert(renumber[q]);
  for (int q = 1; q < cand; q += 2)
    if (seen[q]) out.accepting_states.insert(renumber[q]);
  return out;
}

Nba trim(const Nba& b) {
  std::vector<bool> seen = reachable_states(b.num_states, b.transitions, b.initial);
  std::vector<StateId> renumber(b.num_states, -1);
  int kept = 0;
  for (int q = 0; q < b.num_states; ++q)
    if (seen[q]) renumber[q] = kept++;

  Nba out;
  out.num_states = kept;
  out.alphabet = b.alphabet;
  out.acceptance_kind = b.acceptance_kind;
  for (const auto& t : b.transitions) {
    if (!seen[t.src]) continue;  // a reachable source implies a reachable target
    Transition d = t;
    d.src = renumber[t.src];
    d.dst = renumber[t.dst];
    out.transitions.push_back(d);
  }
  for (StateId q : b.initial) out.initial.insert(renumber[q]);
  for (StateId q : b.accepting_states)
    if (seen[q]) out.accepting_states.insert(renumber[q]);
  return out;
}

}  // namespace omegasynth
