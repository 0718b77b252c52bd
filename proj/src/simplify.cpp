#include "omegasynth/simplify.hpp"

#include <algorithm>
#include <vector>

#include <unordered_map>

namespace omegasynth {

namespace {

// One local rewrite attempt at the root of a (already simplified) node.
// Returns nullptr when no rule fires.
Regex match_finite(const Regex& r, const RuleSet& rules) {
  if (rules.idempotent_union && r->kind == RegexKind::Union && equal(r->left, r->right))
    return r->left;

  if (rules.absorb_into_star_concat && r->kind == RegexKind::Union) {
    const Regex& l = r->left;
    const Regex& rr = r->right;
    // x + xy*  =>  xy*
    if (rr->kind == RegexKind::Concat && rr->right->kind == RegexKind::Star &&
        equal(rr->left, l))
      return rr;
    // xy* + x  =>  xy*
    if (l->kind == RegexKind::Concat && l->right->kind == RegexKind::Star &&
        equal(l->left, rr))
      return l;
  }

  if (rules.star_star && r->kind == RegexKind::Star && r->left->kind == RegexKind::Star)
    return r->left;

  if (rules.epsilon_plus_star && r->kind == RegexKind::Union) {
    if (r->left->kind == RegexKind::Epsilon && r->right->kind == RegexKind::Star)
      return r->right;
    if (r->right->kind == RegexKind::Epsilon && r->left->kind == RegexKind::Star)
      return r->left;
  }

  if (rules.star_concat_star && r->kind == RegexKind::Concat &&
      r->right->kind == RegexKind::Star) {
    // x*x* => x*, both as a bare pair and as the tail of a longer chain.
    if (r->left->kind == RegexKind::Star && equal(r->left->left, r->right->left))
      return r->right;
    if (r->left->kind == RegexKind::Concat && r->left->right->kind == RegexKind::Star &&
        equal(r->left->right->left, r->right->left))
      return r->left;
  }

  return nullptr;
}

// Top-level factors of a (left-associative) concatenation chain, in order.
std::vector<Regex> concat_factors(const Regex& r) {
  std::vector<Regex> out;
  const RegexNode* cur = r.get();
  while (cur->kind == RegexKind::Concat) {
    out.push_back(cur->right);
    cur = cur->left.get();
  }
  // cur is the leftmost factor; reuse an existing handle for it.
  const Regex* leftmost = &r;
  while ((*leftmost)->kind == RegexKind::Concat) leftmost = &(*leftmost)->left;
  out.push_back(*leftmost);
  std::reverse(out.begin(), out.end());
  return out;
}

OmegaRegex match_omega(const OmegaRegex& e, const RuleSet& rules) {
  if (rules.idempotent_union && e->kind == OmegaKind::UnionOmega && equal(e->left, e->right))
    return e->left;

  if (rules.omega_absorb_prefix_tail && e->kind == OmegaKind::ConcatFin &&
      e->left->kind == OmegaKind::Iter) {
    // xyy^w => xy^w, with y matched as a trailing factor segment of the
    // prefix chain (yy^w => y^w when the whole prefix matches).
    const Regex& prefix = e->fin;
    const Regex& body = e->left->fin;
    std::vector<Regex> ps = concat_factors(prefix);
    std::vector<Regex> ys = concat_factors(body);
    if (ps.size() >= ys.size()) {
      bool tail_matches = true;
      for (size_t k = 0; k < ys.size() && tail_matches; ++k)
        tail_matches = equal(ps[ps.size() - ys.size() + k], ys[k]);
      if (tail_matches) {
        if (ps.size() == ys.size()) return e->left;
        // The remaining prefix is an existing subchain: walk up the spine.
        Regex rest = prefix;
        for (size_t k = 0; k < ys.size(); ++k) rest = rest->left;
        return make_concat_fin(std::move(rest), e->left);
      }
    }
  }

  if (rules.omega_star_body && e->kind == OmegaKind::Iter &&
      e->fin->kind == RegexKind::Star && !e->fin->left->nullable)
    return make_omega_iter(e->fin->left);

  return nullptr;
}

struct Rewriter {
  explicit Rewriter(const RuleSet& rs) : rules(rs) {}

  const RuleSet& rules;
  bool changed = false;
  std::unordered_map<const RegexNode*, Regex> memo;
  std::unordered_map<const OmegaNode*, OmegaRegex> omega_memo;

  Regex run(const Regex& r) {
    auto it = memo.find(r.get());
    if (it != memo.end()) {
      if (it->second.get() != r.get()) changed = true;
      return it->second;
    }
    Regex rebuilt = r;
    switch (r->kind) {
      case RegexKind::Empty:
      case RegexKind::Epsilon:
      case RegexKind::Sym:
        break;
      case RegexKind::Union: {
        Regex l = run(r->left);
        Regex rr = run(r->right);
        if (l.get() != r->left.get() || rr.get() != r->right.get())
          rebuilt = make_union(std::move(l), std::move(rr));
        break;
      }
      case RegexKind::Concat: {
        Regex l = run(r->left);
        Regex rr = run(r->right);
        if (l.get() != r->left.get() || rr.get() != r->right.get())
          rebuilt = make_concat(std::move(l), std::move(rr));
        break;
      }
      case RegexKind::Star: {
        Regex c = run(r->left);
        if (c.get() != r->left.get()) rebuilt = make_star(std::move(c));
        break;
      }
    }
    while (Regex next = match_finite(rebuilt, rules)) rebuilt = next;
    if (rebuilt.get() != r.get()) changed = true;
    memo.emplace(r.get(), rebuilt);
    return rebuilt;
  }

  OmegaRegex run_omega(const OmegaRegex& e) {
    auto it = omega_memo.find(e.get());
    if (it != omega_memo.end()) {
      if (it->second.get() != e.get()) changed = true;
      return it->second;
    }
    OmegaRegex rebuilt = e;
    switch (e->kind) {
      case OmegaKind::EmptyOmega:
        break;
      case OmegaKind::Iter: {
        Regex b = run(e->fin);
        if (b.get() != e->fin.get()) rebuilt = make_omega_iter(std::move(b));
        break;
      }
      case OmegaKind::ConcatFin: {
        Regex p = run(e->fin);
        OmegaRegex rest = run_omega(e->left);
        if (p.get() != e->fin.get() || rest.get() != e->left.get())
          rebuilt = make_concat_fin(std::move(p), std::move(rest));
        break;
      }
      case OmegaKind::UnionOmega: {
        OmegaRegex l = run_omega(e->left);
        OmegaRegex r = run_omega(e->right);
        if (l.get() != e->left.get() || r.get() != e->right.get())
          rebuilt = make_union_omega(std::move(l), std::move(r));
        break;
      }
    }
    while (OmegaRegex next = match_omega(rebuilt, rules)) rebuilt = next;
    if (rebuilt.get() != e.get()) changed = true;
    omega_memo.emplace(e.get(), rebuilt);
    return rebuilt;
  }
};

}  // namespace

SimplifyResult simplify(const OmegaRegex& e, const RuleSet& rules, int max_passes) {
  SimplifyResult out;
  out.expr = e;
  while (true) {
    Rewriter rw(rules);
    OmegaRegex next = rw.run_omega(out.expr);
    ++out.passes;
    if (!rw.changed) return out;
    out.expr = std::move(next);
    if (out.passes >= max_passes) {
      out.cap_exceeded = true;
      return out;
    }
  }
}

SimplifyRegexResult simplify(const Regex& r, const RuleSet& rules, int max_passes) {
  SimplifyRegexResult out;
  out.expr = r;
  while (true) {
    Rewriter rw(rules);
    Regex next = rw.run(out.expr);
    ++out.passes;
    if (!rw.changed) return out;
    out.expr = std::move(next);
    if (out.passes >= max_passes) {
      out.cap_exceeded = true;
      return out;
    }
  }
}

}  // namespace omegasynth
