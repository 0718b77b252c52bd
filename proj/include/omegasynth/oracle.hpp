#pragma once

#include <cstdint>
#include <optional>

#include "omegasynth/automata.hpp"
#include "omegasynth/deadline.hpp"
#include "omegasynth/expr.hpp"

namespace omegasynth {

/// Ultimately periodic word prefix.loop^w; the loop is nonempty.
struct Lasso {
  Word prefix;
  Word loop;
};

struct EquivBounds {
  int max_prefix = 4;
  int max_loop = 4;
};

/// Acceptance of a lasso word by an NBA (either kind; state-based is lifted
/// internally). True iff the product of the automaton with the lasso's
/// position graph has a reachable cycle through an accepting transition.
bool nba_accepts_lasso(const Nba& b, const Lasso& lasso);

/// Same check with the automaton's adjacency prepared once; used by the
/// bounded enumeration.
class LassoAcceptance {
public:
  explicit LassoAcceptance(const Nba& b);
  bool accepts(const Lasso& lasso) const;
  int alphabet_size() const { return alphabet_size_; }

private:
  struct Edge {
    StateId dst;
    bool accepting;
  };
  int num_states_ = 0;
  int alphabet_size_ = 0;
  std::vector<std::vector<Edge>> adj_;  // indexed by src * alphabet + sym
  std::vector<StateId> initial_;
};

/// Position-automaton (Glushkov) construction; the result is epsilon-free
/// with a single initial state that has no incoming transitions.
Nfa regex_to_nfa(const Regex& r, const std::vector<std::string>& alphabet);

/// Buchi automaton for an omega-regular expression over the given alphabet:
/// omega iteration loops an epsilon-free NFA back to its initial state with
/// the loop-closing transitions as the accepting ones; finite prefixes splice
/// onto the initial states; unions are disjoint. Throws on a nullable
/// iteration body (defensive re-check of the type invariant).
Nba omega_regex_to_nba(const OmegaRegex& e, const std::vector<std::string>& alphabet);

struct EquivResult {
  bool equal = true;
  std::optional<Lasso> counterexample;
  bool cost_warning = false;  // enumeration size exceeded the budget
  long long lassos_checked = 0;
};

/// Enumerates every lasso with |prefix| <= max_prefix, 1 <= |loop| <=
/// max_loop (shorter first, then lexicographic; prefixes outermost) and
/// reports the first disagreement. Requires equal alphabets.
EquivResult bounded_equiv(const Nba& x, const Nba& y, EquivBounds bounds,
                          long long budget = 20000000,
                          const Deadline& deadline = Deadline::never());

/// Seed-deterministic random automaton for test corpora: transition-based,
/// initial state 0, trimmed. Valid ranges: num_states >= 1, 1 <= alphabet_size
/// <= 26, densities in [0,1].
Nba random_nba(std::uint64_t seed, int num_states, int alphabet_size, double edge_density,
               double acc_prob);

}  // namespace omegasynth
