#include "omegasynth/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace omegasynth {

// ---------------------------------------------------------------------------
// Lasso acceptance

LassoAcceptance::LassoAcceptance(const Nba& b) {
  const Nba* src = &b;
  Nba lifted;
  if (b.acceptance_kind == AcceptanceKind::StateBased) {
    lifted = lift_state_based(b);
    src = &lifted;
  }
  num_states_ = src->num_states;
  alphabet_size_ = static_cast<int>(src->alphabet.size());
  adj_.assign(static_cast<size_t>(num_states_) * static_cast<size_t>(alphabet_size_), {});
  for (const auto& t : src->transitions)
    adj_[static_cast<size_t>(t.src) * alphabet_size_ + static_cast<size_t>(t.sym)].push_back(
        {t.dst, t.accepting});
  initial_.assign(src->initial.begin(), src->initial.end());
}

bool LassoAcceptance::accepts(const Lasso& lasso) const {
  if (lasso.loop.empty()) throw std::invalid_argument("lasso loop must be nonempty");
  for (SymbolId s : lasso.prefix)
    if (s < 0 || s >= alphabet_size_)
      throw std::invalid_argument("nba_accepts_lasso: unknown symbol");
  for (SymbolId s : lasso.loop)
    if (s < 0 || s >= alphabet_size_)
      throw std::invalid_argument("nba_accepts_lasso: unknown symbol");
  if (num_states_ == 0 || initial_.empty()) return false;

  const int plen = static_cast<int>(lasso.prefix.size());
  const int total = plen + static_cast<int>(lasso.loop.size());
  auto sym_at = [&](int pos) {
    return pos < plen ? lasso.prefix[static_cast<size_t>(pos)]
                      : lasso.loop[static_cast<size_t>(pos - plen)];
  };
  auto next_pos = [&](int pos) { return pos + 1 < total ? pos + 1 : plen; };
  auto node = [&](StateId q, int pos) { return q * total + pos; };

  // Reachable product nodes from (q0, 0).
  const int nodes = num_states_ * total;
  std::vector<char> seen(static_cast<size_t>(nodes), 0);
  std::vector<int> stack;
  bool any_accepting = false;
  auto edges_of = [&](int v) -> const std::vector<Edge>& {
    StateId q = v / total;
    int pos = v % total;
    return adj_[static_cast<size_t>(q) * alphabet_size_ + static_cast<size_t>(sym_at(pos))];
  };
  for (StateId q : initial_) {
    int v = node(q, 0);
    if (!seen[static_cast<size_t>(v)]) {
      seen[static_cast<size_t>(v)] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    int np = next_pos(v % total);
    for (const Edge& e : edges_of(v)) {
      if (e.accepting) any_accepting = true;
      int w = node(e.dst, np);
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  if (!any_accepting) return false;

  // An accepting product edge lies on a cycle iff its endpoints share an
  // SCC (or it is a self-loop). Iterative Tarjan, successors on the fly.
  std::vector<int> index(static_cast<size_t>(nodes), -1);
  std::vector<int> low(static_cast<size_t>(nodes), 0);
  std::vector<int> comp(static_cast<size_t>(nodes), -1);
  std::vector<char> onstack(static_cast<size_t>(nodes), 0);
  std::vector<int> tstack;
  struct Frame {
    int v;
    size_t child;
  };
  std::vector<Frame> frames;
  int next_index = 0, ncomp = 0;

  for (int root = 0; root < nodes; ++root) {
    if (!seen[static_cast<size_t>(root)] || index[static_cast<size_t>(root)] >= 0) continue;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      int v = frames.back().v;
      size_t child = frames.back().child;
      if (child == 0) {
        index[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = next_index++;
        tstack.push_back(v);
        onstack[static_cast<size_t>(v)] = 1;
      }
      const std::vector<Edge>& out = edges_of(v);
      if (child < out.size()) {
        ++frames.back().child;
        int w = node(out[child].dst, next_pos(v % total));
        if (index[static_cast<size_t>(w)] < 0) {
          frames.push_back({w, 0});
        } else if (onstack[static_cast<size_t>(w)]) {
          low[static_cast<size_t>(v)] =
              std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
        }
        continue;
      }
      if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
        while (true) {
          int u = tstack.back();
          tstack.pop_back();
          onstack[static_cast<size_t>(u)] = 0;
          comp[static_cast<size_t>(u)] = ncomp;
          if (u == v) break;
        }
        ++ncomp;
      }
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().v;
        low[static_cast<size_t>(parent)] =
            std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(v)]);
      }
    }
  }

  for (int v = 0; v < nodes; ++v) {
    if (!seen[static_cast<size_t>(v)]) continue;
    int np = next_pos(v % total);
    for (const Edge& e : edges_of(v)) {
      if (!e.accepting) continue;
      int w = node(e.dst, np);
      if (w == v || comp[static_cast<size_t>(v)] == comp[static_cast<size_t>(w)]) return true;
    }
  }
  return false;
}

bool nba_accepts_lasso(const Nba& b, const Lasso& lasso) {
  return LassoAcceptance(b).accepts(lasso);
}

// ---------------------------------------------------------------------------
// Glushkov construction

namespace {

struct GlushkovBuild {
  std::vector<SymbolId> sym_of_pos;          // 1-based positions
  std::vector<std::vector<int>> follow;      // by position
  const std::vector<std::string>& alphabet;

  SymbolId lookup(const std::string& label) {
    for (size_t i = 0; i < alphabet.size(); ++i)
      if (alphabet[i] == label) return static_cast<SymbolId>(i);
    throw std::invalid_argument("regex_to_nfa: symbol '" + label + "' not in alphabet");
  }

  struct Info {
    bool nullable;
    std::vector<int> first, last;
  };

  static void merge(std::vector<int>& into, const std::vector<int>& from) {
    into.insert(into.end(), from.begin(), from.end());
  }

  void connect(const std::vector<int>& lasts, const std::vector<int>& firsts) {
    for (int p : lasts) merge(follow[static_cast<size_t>(p)], firsts);
  }

  Info walk(const RegexNode* r) {
    switch (r->kind) {
      case RegexKind::Empty:
        return {false, {}, {}};
      case RegexKind::Epsilon:
        return {true, {}, {}};
      case RegexKind::Sym: {
        sym_of_pos.push_back(lookup(r->label));
        follow.emplace_back();
        int p = static_cast<int>(sym_of_pos.size());  // 1-based
        return {false, {p}, {p}};
      }
      case RegexKind::Union: {
        Info a = walk(r->left.get());
        Info b = walk(r->right.get());
        Info out;
        out.nullable = a.nullable || b.nullable;
        out.first = std::move(a.first);
        merge(out.first, b.first);
        out.last = std::move(a.last);
        merge(out.last, b.last);
        return out;
      }
      case RegexKind::Concat: {
        Info a = walk(r->left.get());
        Info b = walk(r->right.get());
        connect(a.last, b.first);
        Info out;
        out.nullable = a.nullable && b.nullable;
        out.first = a.first;
        if (a.nullable) merge(out.first, b.first);
        out.last = b.last;
        if (b.nullable) merge(out.last, a.last);
        return out;
      }
      case RegexKind::Star: {
        Info a = walk(r->left.get());
        connect(a.last, a.first);
        return {true, std::move(a.first), std::move(a.last)};
      }
    }
    return {false, {}, {}};
  }
};

}  // namespace

Nfa regex_to_nfa(const Regex& r, const std::vector<std::string>& alphabet) {
  GlushkovBuild g{{}, {}, alphabet};
  // follow is indexed by 1-based position; reserve slot 0 for the start.
  g.follow.emplace_back();
  GlushkovBuild::Info info = g.walk(r.get());

  Nfa out;
  out.num_states = static_cast<int>(g.sym_of_pos.size()) + 1;
  out.alphabet = alphabet;
  out.initial = {0};
  for (int p : info.first) {
    Transition t;
    t.src = 0;
    t.sym = g.sym_of_pos[static_cast<size_t>(p - 1)];
    t.dst = p;
    out.transitions.push_back(t);
  }
  for (size_t p = 1; p < g.follow.size(); ++p) {
    for (int q : g.follow[p]) {
      Transition t;
      t.src = static_cast<StateId>(p);
      t.sym = g.sym_of_pos[static_cast<size_t>(q - 1)];
      t.dst = q;
      out.transitions.push_back(t);
    }
  }
  for (int p : info.last) out.accepting.insert(p);
  if (info.nullable) out.accepting.insert(0);
  return out;
}

// ---------------------------------------------------------------------------
// Omega expression -> NBA

namespace {

Nba empty_nba(const std::vector<std::string>& alphabet) {
  Nba out;
  out.alphabet = alphabet;
  return out;
}

Nba build_omega_nba(const OmegaNode* e, const std::vector<std::string>& alphabet) {
  switch (e->kind) {
    case OmegaKind::EmptyOmega:
      return empty_nba(alphabet);

    case OmegaKind::Iter: {
      if (e->fin->nullable)
        throw std::invalid_argument("omega_regex_to_nba: nullable omega iteration body");
      Nfa a = regex_to_nfa(e->fin, alphabet);
      Nba out;
      out.num_states = a.num_states;
      out.alphabet = alphabet;
      out.initial = a.initial;
      for (const auto& t : a.transitions) {
        Transition plain = t;
        plain.accepting = false;
        out.transitions.push_back(plain);
        if (a.accepting.count(t.dst)) {
          // Loop closure: one body finishes, the next begins.
          for (StateId q0 : a.initial) {
            Transition back;
            back.src = t.src;
            back.sym = t.sym;
            back.dst = q0;
            back.accepting = true;
            out.transitions.push_back(back);
          }
        }
      }
      return out;
    }

    case OmegaKind::ConcatFin: {
      Nfa a = regex_to_nfa(e->fin, alphabet);
      Nba rest = build_omega_nba(e->left.get(), alphabet);
      Nba out;
      out.num_states = a.num_states + rest.num_states;
      out.alphabet = alphabet;
      const int off = a.num_states;
      for (const auto& t : a.transitions) {
        Transition plain = t;
        plain.accepting = false;
        out.transitions.push_back(plain);
        if (a.accepting.count(t.dst)) {
          for (StateId r0 : rest.initial) {
            Transition hop;
            hop.src = t.src;
            hop.sym = t.sym;
            hop.dst = r0 + off;
            out.transitions.push_back(hop);
          }
        }
      }
      for (const auto& t : rest.transitions) {
        Transition shifted = t;
        shifted.src += off;
        shifted.dst += off;
        out.transitions.push_back(shifted);
      }
      out.initial = a.initial;
      if (nullable(e->fin))
        for (StateId r0 : rest.initial) out.initial.insert(r0 + off);
      return out;
    }

    case OmegaKind::UnionOmega: {
      Nba l = build_omega_nba(e->left.get(), alphabet);
      Nba r = build_omega_nba(e->right.get(), alphabet);
      Nba out;
      out.num_states = l.num_states + r.num_states;
      out.alphabet = alphabet;
      out.transitions = l.transitions;
      const int off = l.num_states;
      for (const auto& t : r.transitions) {
        Transition shifted = t;
        shifted.src += off;
        shifted.dst += off;
        out.transitions.push_back(shifted);
      }
      out.initial = l.initial;
      for (StateId q : r.initial) out.initial.insert(q + off);
      return out;
    }
  }
  return empty_nba(alphabet);
}

}  // namespace

Nba omega_regex_to_nba(const OmegaRegex& e, const std::vector<std::string>& alphabet) {
  Nba out = build_omega_nba(e.get(), alphabet);
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Bounded equivalence

namespace {

// Advances `w` to the next word of the same length in lexicographic symbol
// order; false when it wraps around.
bool next_word(Word& w, int k) {
  for (size_t i = w.size(); i-- > 0;) {
    if (++w[i] < k) return true;
    w[i] = 0;
  }
  return false;
}

}  // namespace

EquivResult bounded_equiv(const Nba& x, const Nba& y, EquivBounds bounds, long long budget,
                          const Deadline& deadline) {
  if (x.alphabet != y.alphabet)
    throw std::invalid_argument("bounded_equiv: alphabets differ");
  if (bounds.max_loop < 1) throw std::invalid_argument("bounded_equiv: max_loop must be >= 1");

  EquivResult out;
  const int k = static_cast<int>(x.alphabet.size());
  if (k == 0) return out;  // no omega-words at all

  // Cost estimate: number of lassos in the enumeration.
  long long prefixes = 0, loops = 0, pw = 1;
  for (int n = 0; n <= bounds.max_prefix; ++n) {
    prefixes += pw;
    if (prefixes > budget) break;
    pw *= k;
  }
  pw = k;
  for (int n = 1; n <= bounds.max_loop; ++n) {
    loops += pw;
    if (loops > budget) break;
    pw *= k;
  }
  if (prefixes > budget / (loops > 0 ? loops : 1)) out.cost_warning = true;

  LassoAcceptance ax(x), ay(y);
  for (int plen = 0; plen <= bounds.max_prefix; ++plen) {
    Word prefix(static_cast<size_t>(plen), 0);
    bool more_prefixes = true;
    while (more_prefixes) {
      for (int llen = 1; llen <= bounds.max_loop; ++llen) {
        Word loop(static_cast<size_t>(llen), 0);
        bool more_loops = true;
        while (more_loops) {
          deadline.check("bounded equivalence");
          Lasso lasso{prefix, loop};
          ++out.lassos_checked;
          if (ax.accepts(lasso) != ay.accepts(lasso)) {
            out.equal = false;
            out.counterexample = lasso;
            return out;
          }
          more_loops = next_word(loop, k);
        }
      }
      more_prefixes = plen > 0 && next_word(prefix, k);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random corpus generation

Nba random_nba(std::uint64_t seed, int num_states, int alphabet_size, double edge_density,
               double acc_prob) {
  if (num_states < 1) throw std::invalid_argument("random_nba: num_states must be >= 1");
  if (alphabet_size < 1 || alphabet_size > 26)
    throw std::invalid_argument("random_nba: alphabet_size must be in [1,26]");
  if (edge_density < 0.0 || edge_density > 1.0)
    throw std::invalid_argument("random_nba: edge_density must be in [0,1]");
  if (acc_prob < 0.0 || acc_prob > 1.0)
    throw std::invalid_argument("random_nba: acc_prob must be in [0,1]");

  std::mt19937_64 gen(seed);
  // Platform-independent uniform double in [0,1).
  auto coin = [&](double p) { return (gen() >> 11) * (1.0 / 9007199254740992.0) < p; };

  Nba b;
  b.num_states = num_states;
  for (int i = 0; i < alphabet_size; ++i) b.alphabet.push_back(std::string(1, 'a' + i));
  b.initial = {0};
  for (StateId src = 0; src < num_states; ++src)
    for (SymbolId sym = 0; sym < alphabet_size; ++sym)
      for (StateId dst = 0; dst < num_states; ++dst)
        if (coin(edge_density)) {
          Transition t;
          t.src = src;
          t.sym = sym;
          t.dst = dst;
          t.accepting = coin(acc_prob);
          b.transitions.push_back(t);
        }
  return trim(b);
}

}  // namespace omegasynth
