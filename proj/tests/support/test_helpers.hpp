#pragma once

// Shared test scaffolding: fixture loading, word enumeration, and the
// independent oracles the module properties are checked against. The oracles
// here deliberately avoid the library's algorithms (subset simulation,
// Glushkov, state elimination) and recompute everything from definitions.

#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "omegasynth/automata.hpp"
#include "omegasynth/decompose.hpp"
#include "omegasynth/expr.hpp"

namespace omegasynth::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(OMEGASYNTH_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// All words of length <= max_len over symbols 0..k-1, shortest first, then
/// lexicographic.
inline std::vector<Word> words_up_to(int k, int max_len) {
  std::vector<Word> out{{}};
  size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i)
      for (SymbolId s = 0; s < k; ++s) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return out;
}

/// Word from single-character display labels, e.g. "bab" over {a,b,...}.
inline Word word_from_labels(const Nba& b, const std::string& text) {
  Word w;
  for (char c : text) {
    SymbolId id = -1;
    for (size_t i = 0; i < b.alphabet.size(); ++i)
      if (b.alphabet[i] == std::string(1, c)) id = static_cast<SymbolId>(i);
    if (id < 0) throw std::runtime_error("label not in alphabet");
    w.push_back(id);
  }
  return w;
}

/// Direct first-arrival run enumerator over the NBA itself (no triplet NFA
/// involved): does `w` have a run from `i` that reaches `j` exactly at its
/// end and never earlier, where every step leaving state `i` is rejecting
/// (Rej) or accepting (Acc)?
inline bool has_first_arrival_run(const Nba& b, StateId i, StateId j, const Word& w,
                                  TripletKind kind) {
  if (w.empty()) return false;
  std::function<bool(StateId, size_t)> go = [&](StateId at, size_t pos) -> bool {
    if (pos == w.size()) return at == j;
    if (pos > 0 && at == j) return false;  // arrived earlier than the end
    for (const auto& t : b.transitions) {
      if (t.src != at || t.sym != w[pos]) continue;
      if (t.src == i) {
        if (kind == TripletKind::Rej && t.accepting) continue;
        if (kind == TripletKind::Acc && !t.accepting) continue;
      }
      if (go(t.dst, pos + 1)) return true;
    }
    return false;
  };
  return go(i, 0);
}

/// Memoized recursive regex matcher, independent of the Glushkov and state
/// elimination paths. Matches `w[lo..hi)` against the node.
class RegexMatcher {
public:
  explicit RegexMatcher(const Word& w) : w_(w) {}

  bool matches(const Regex& r) { return match(r.get(), 0, w_.size()); }

  bool match(const RegexNode* r, size_t lo, size_t hi) {
    auto key = std::make_tuple(r, lo, hi);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool ok = false;
    switch (r->kind) {
      case RegexKind::Empty:
        ok = false;
        break;
      case RegexKind::Epsilon:
        ok = lo == hi;
        break;
      case RegexKind::Sym:
        ok = hi == lo + 1 && label_at(lo) == r->label;
        break;
      case RegexKind::Union:
        ok = match(r->left.get(), lo, hi) || match(r->right.get(), lo, hi);
        break;
      case RegexKind::Concat:
        for (size_t mid = lo; mid <= hi && !ok; ++mid)
          ok = match(r->left.get(), lo, mid) && match(r->right.get(), mid, hi);
        break;
      case RegexKind::Star:
        if (lo == hi) {
          ok = true;
        } else {
          // First block consumes at least one symbol.
          for (size_t mid = lo + 1; mid <= hi && !ok; ++mid)
            ok = match(r->left.get(), lo, mid) && match(r, mid, hi);
        }
        break;
    }
    memo_.emplace(key, ok);
    return ok;
  }

  void set_alphabet(const std::vector<std::string>& alphabet) { alphabet_ = &alphabet; }

private:
  std::string label_at(size_t i) const {
    return (*alphabet_)[static_cast<size_t>(w_[i])];
  }

  const Word& w_;
  const std::vector<std::string>* alphabet_ = nullptr;
  std::map<std::tuple<const RegexNode*, size_t, size_t>, bool> memo_;
};

inline bool regex_matches(const Regex& r, const Word& w,
                          const std::vector<std::string>& alphabet) {
  RegexMatcher m(w);
  m.set_alphabet(alphabet);
  return m.matches(r);
}

/// Deterministic xorshift generator for hand-rolled property tests; kept
/// separate from the library's mt19937 so test data does not depend on it.
struct TestRng {
  std::uint64_t state;

  explicit TestRng(std::uint64_t seed) : state(seed * 2654435769u + 1) {}

  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  bool chance(double p) { return (next() >> 11) * (1.0 / 9007199254740992.0) < p; }
};

}  // namespace omegasynth::testing
