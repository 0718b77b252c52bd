#include "omegasynth/elimination.hpp"

#include <deque>
#include <map>

namespace omegasynth {

namespace {

std::vector<bool> forward_reach(const Nfa& a, const std::set<StateId>& from) {
  std::vector<std::vector<StateId>> succ(a.num_states);
  for (const auto& t : a.transitions) succ[t.src].push_back(t.dst);
  std::vector<bool> seen(a.num_states, false);
  std::deque<StateId> queue(from.begin(), from.end());
  for (StateId q : from) seen[q] = true;
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (StateId d : succ[q])
      if (!seen[d]) {
        seen[d] = true;
        queue.push_back(d);
      }
  }
  return seen;
}

std::vector<bool> backward_reach(const Nfa& a, const std::set<StateId>& to) {
  std::vector<std::vector<StateId>> pred(a.num_states);
  for (const auto& t : a.transitions) pred[t.dst].push_back(t.src);
  std::vector<bool> seen(a.num_states, false);
  std::deque<StateId> queue(to.begin(), to.end());
  for (StateId q : to) seen[q] = true;
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (StateId d : pred[q])
      if (!seen[d]) {
        seen[d] = true;
        queue.push_back(d);
      }
  }
  return seen;
}

// Generalized NFA over the kept states plus a fresh start (-1) and sink (n).
// At most one regex edge per ordered pair; parallel edges merge by union in
// insertion order.
struct Gnfa {
  std::map<std::pair<int, int>, Regex> edges;

  void add(int p, int q, Regex r) {
    auto it = edges.find({p, q});
    if (it == edges.end()) {
      if (r->kind != RegexKind::Empty) edges.emplace(std::make_pair(p, q), std::move(r));
    } else {
      it->second = make_union(it->second, std::move(r));
    }
  }

  void eliminate(int q) {
    Regex self = make_empty();
    if (auto it = edges.find({q, q}); it != edges.end()) {
      self = it->second;
      edges.erase(it);
    }
    Regex loop = make_star(self);  // Star(Empty) normalizes to epsilon

    std::vector<std::pair<int, Regex>> in, out;
    for (auto it = edges.begin(); it != edges.end();) {
      if (it->first.second == q) {
        in.emplace_back(it->first.first, it->second);
        it = edges.erase(it);
      } else if (it->first.first == q) {
        out.emplace_back(it->first.second, it->second);
        it = edges.erase(it);
      } else {
        ++it;
      }
    }
    for (const auto& [p, rin] : in)
      for (const auto& [r, rout] : out)
        add(p, r, make_concat(make_concat(rin, loop), rout));
  }

  int indegree(int q) const {
    int n = 0;
    for (const auto& [key, r] : edges) {
      (void)r;
      if (key.second == q && key.first != q) ++n;
    }
    return n;
  }
  int outdegree(int q) const {
    int n = 0;
    for (const auto& [key, r] : edges) {
      (void)r;
      if (key.first == q && key.second != q) ++n;
    }
    return n;
  }
};

}  // namespace

Regex nfa_to_regex(const Nfa& nfa, EliminationOrder order, const Deadline& deadline) {
  std::vector<bool> fwd = forward_reach(nfa, nfa.initial);
  std::vector<bool> bwd = backward_reach(nfa, nfa.accepting);
  std::vector<StateId> kept;
  for (StateId q = 0; q < nfa.num_states; ++q)
    if (fwd[q] && bwd[q]) kept.push_back(q);

  bool live = false;
  for (StateId q : nfa.accepting)
    if (q < nfa.num_states && fwd[q]) live = true;
  if (!live) return make_empty();

  const int start = -1;
  const int sink = nfa.num_states;
  Gnfa g;
  for (StateId q : nfa.initial)
    if (fwd[q] && bwd[q]) g.add(start, q, make_epsilon());
  for (StateId q : nfa.accepting)
    if (q < nfa.num_states && fwd[q]) g.add(q, sink, make_epsilon());
  for (const auto& t : nfa.transitions)
    if (fwd[t.src] && bwd[t.src] && fwd[t.dst] && bwd[t.dst])
      g.add(t.src, t.dst, make_sym(nfa.alphabet.at(static_cast<size_t>(t.sym))));

  if (order == EliminationOrder::LowestIndexFirst) {
    for (StateId q : kept) {
      deadline.check("state elimination");
      g.eliminate(q);
    }
  } else {
    std::vector<StateId> remaining = kept;
    while (!remaining.empty()) {
      deadline.check("state elimination");
      size_t best = 0;
      long best_cost = -1;
      for (size_t i = 0; i < remaining.size(); ++i) {
        long cost = static_cast<long>(g.indegree(remaining[i])) * g.outdegree(remaining[i]);
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          best = i;
        }
      }
      g.eliminate(remaining[best]);
      remaining.erase(remaining.begin() + static_cast<long>(best));
    }
  }

  auto it = g.edges.find({start, sink});
  return it == g.edges.end() ? make_empty() : it->second;
}

}  // namespace omegasynth
