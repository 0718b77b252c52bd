#include "omegasynth/expr.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace omegasynth {

namespace {

Regex node(RegexKind kind, std::string label, Regex left, Regex right, bool nullable) {
  auto n = std::make_shared<RegexNode>();
  n->kind = kind;
  n->label = std::move(label);
  n->left = std::move(left);
  n->right = std::move(right);
  n->nullable = nullable;
  return n;
}

OmegaRegex omega_node(OmegaKind kind, Regex fin, OmegaRegex left, OmegaRegex right) {
  auto n = std::make_shared<OmegaNode>();
  n->kind = kind;
  n->fin = std::move(fin);
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

}  // namespace

// Long Concat/Union chains would otherwise unwind recursively through the
// shared_ptr members; steal the children and release them with a worklist.
RegexNode::~RegexNode() {
  std::vector<Regex> pending;
  pending.push_back(std::move(left));
  pending.push_back(std::move(right));
  while (!pending.empty()) {
    Regex n = std::move(pending.back());
    pending.pop_back();
    if (n && n.use_count() == 1) {
      auto* m = const_cast<RegexNode*>(n.get());
      pending.push_back(std::move(m->left));
      pending.push_back(std::move(m->right));
    }
  }
}

OmegaNode::~OmegaNode() {
  std::vector<OmegaRegex> pending;
  pending.push_back(std::move(left));
  pending.push_back(std::move(right));
  while (!pending.empty()) {
    OmegaRegex n = std::move(pending.back());
    pending.pop_back();
    if (n && n.use_count() == 1) {
      auto* m = const_cast<OmegaNode*>(n.get());
      pending.push_back(std::move(m->left));
      pending.push_back(std::move(m->right));
    }
  }
}

Regex make_empty() {
  static const Regex instance = node(RegexKind::Empty, "", nullptr, nullptr, false);
  return instance;
}

Regex make_epsilon() {
  static const Regex instance = node(RegexKind::Epsilon, "", nullptr, nullptr, true);
  return instance;
}

Regex make_sym(std::string label) {
  if (label.empty()) throw std::invalid_argument("make_sym: empty label");
  return node(RegexKind::Sym, std::move(label), nullptr, nullptr, false);
}

Regex make_union(Regex a, Regex b) {
  if (a->kind == RegexKind::Empty) return b;
  if (b->kind == RegexKind::Empty) return a;
  if (b->kind == RegexKind::Union)  // keep chains left-associative
    return make_union(make_union(std::move(a), b->left), b->right);
  bool nul = a->nullable || b->nullable;
  return node(RegexKind::Union, "", std::move(a), std::move(b), nul);
}

Regex make_concat(Regex a, Regex b) {
  if (a->kind == RegexKind::Empty || b->kind == RegexKind::Empty) return make_empty();
  if (a->kind == RegexKind::Epsilon) return b;
  if (b->kind == RegexKind::Epsilon) return a;
  if (b->kind == RegexKind::Concat)  // keep chains left-associative
    return make_concat(make_concat(std::move(a), b->left), b->right);
  bool nul = a->nullable && b->nullable;
  return node(RegexKind::Concat, "", std::move(a), std::move(b), nul);
}

Regex make_star(Regex a) {
  if (a->kind == RegexKind::Empty || a->kind == RegexKind::Epsilon) return make_epsilon();
  return node(RegexKind::Star, "", std::move(a), nullptr, true);
}

bool equal(const Regex& a, const Regex& b) {
  std::vector<std::pair<const RegexNode*, const RegexNode*>> stack{{a.get(), b.get()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x == y) continue;
    if (!x || !y) return false;
    if (x->kind != y->kind || x->label != y->label) return false;
    stack.emplace_back(x->left.get(), y->left.get());
    stack.emplace_back(x->right.get(), y->right.get());
  }
  return true;
}

OmegaRegex make_empty_omega() {
  static const OmegaRegex instance =
      omega_node(OmegaKind::EmptyOmega, nullptr, nullptr, nullptr);
  return instance;
}

OmegaRegex make_omega_iter(Regex body) {
  if (body->kind == RegexKind::Empty) return make_empty_omega();
  if (body->nullable)
    throw std::invalid_argument("make_omega_iter: body accepts the empty word");
  return omega_node(OmegaKind::Iter, std::move(body), nullptr, nullptr);
}

OmegaRegex make_concat_fin(Regex prefix, OmegaRegex rest) {
  if (prefix->kind == RegexKind::Empty) return make_empty_omega();
  if (rest->kind == OmegaKind::EmptyOmega) return make_empty_omega();
  if (prefix->kind == RegexKind::Epsilon) return rest;
  return omega_node(OmegaKind::ConcatFin, std::move(prefix), std::move(rest), nullptr);
}

OmegaRegex make_union_omega(OmegaRegex a, OmegaRegex b) {
  if (a->kind == OmegaKind::EmptyOmega) return b;
  if (b->kind == OmegaKind::EmptyOmega) return a;
  if (b->kind == OmegaKind::UnionOmega)
    return make_union_omega(make_union_omega(std::move(a), b->left), b->right);
  return omega_node(OmegaKind::UnionOmega, nullptr, std::move(a), std::move(b));
}

bool equal(const OmegaRegex& a, const OmegaRegex& b) {
  std::vector<std::pair<const OmegaNode*, const OmegaNode*>> stack{{a.get(), b.get()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x == y) continue;
    if (!x || !y) return false;
    if (x->kind != y->kind) return false;
    if (!!x->fin != !!y->fin) return false;
    if (x->fin && !equal(x->fin, y->fin)) return false;
    stack.emplace_back(x->left.get(), y->left.get());
    stack.emplace_back(x->right.get(), y->right.get());
  }
  return true;
}

// ---------------------------------------------------------------------------
// Metrics. Shared subtrees are memoized so counts stay exact tree counts
// while the walk stays linear in distinct nodes.

namespace {

struct MetricWalker {
  std::unordered_map<const RegexNode*, Metrics> memo;

  Metrics walk(const RegexNode* r) {
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    Metrics m;
    switch (r->kind) {
      case RegexKind::Empty:
      case RegexKind::Epsilon:
        m = {1, 0, 0};
        break;
      case RegexKind::Sym:
        m = {1, 1, 0};
        break;
      case RegexKind::Union: {
        Metrics l = walk(r->left.get());
        Metrics rr = walk(r->right.get());
        m.rpn = 1 + l.rpn + rr.rpn;
        m.tllen = std::max(l.tllen, rr.tllen);
        m.star_height = std::max(l.star_height, rr.star_height);
        break;
      }
      case RegexKind::Concat: {
        Metrics l = walk(r->left.get());
        Metrics rr = walk(r->right.get());
        m.rpn = 1 + l.rpn + rr.rpn;
        m.tllen = l.tllen + rr.tllen;
        m.star_height = std::max(l.star_height, rr.star_height);
        break;
      }
      case RegexKind::Star: {
        Metrics c = walk(r->left.get());
        m.rpn = 1 + c.rpn;
        m.tllen = c.tllen;
        m.star_height = 1 + c.star_height;
        break;
      }
    }
    memo.emplace(r, m);
    return m;
  }

  Metrics walk_omega(const OmegaNode* e) {
    Metrics m;
    switch (e->kind) {
      case OmegaKind::EmptyOmega:
        m = {1, 0, 0};
        break;
      case OmegaKind::Iter: {
        Metrics b = walk(e->fin.get());
        m.rpn = 1 + b.rpn;
        m.tllen = b.tllen;
        m.star_height = b.star_height;  // omega iteration is not a Kleene star
        break;
      }
      case OmegaKind::ConcatFin: {
        Metrics p = walk(e->fin.get());
        Metrics r = walk_omega(e->left.get());
        m.rpn = 1 + p.rpn + r.rpn;
        m.tllen = p.tllen + r.tllen;
        m.star_height = std::max(p.star_height, r.star_height);
        break;
      }
      case OmegaKind::UnionOmega: {
        Metrics l = walk_omega(e->left.get());
        Metrics r = walk_omega(e->right.get());
        m.rpn = 1 + l.rpn + r.rpn;
        m.tllen = std::max(l.tllen, r.tllen);
        m.star_height = std::max(l.star_height, r.star_height);
        break;
      }
    }
    return m;
  }
};

}  // namespace

Metrics metrics(const Regex& r) {
  MetricWalker w;
  return w.walk(r.get());
}

Metrics metrics(const OmegaRegex& e) {
  MetricWalker w;
  return w.walk_omega(e.get());
}

long long rpn(const Regex& r) { return metrics(r).rpn; }
long long rpn(const OmegaRegex& e) { return metrics(e).rpn; }
long long tllen(const Regex& r) { return metrics(r).tllen; }
long long tllen(const OmegaRegex& e) { return metrics(e).tllen; }
long long star_height(const Regex& r) { return metrics(r).star_height; }
long long star_height(const OmegaRegex& e) { return metrics(e).star_height; }

// ---------------------------------------------------------------------------
// Printing. Minimal parentheses with two conventions fixed for determinism:
// every expression re-parses to the identical tree, and a star appearing as
// the left operand of a concatenation parenthesizes its operand, e.g.
// (c)*da*b rather than c*da*b.

namespace {

bool is_atom(const RegexNode* r) {
  return r->kind == RegexKind::Empty || r->kind == RegexKind::Epsilon ||
         r->kind == RegexKind::Sym;
}

bool plain_symbol_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

void print_sym(std::string& out, const std::string& label) {
  if (label.size() == 1 && plain_symbol_char(label[0])) {
    out += label;
    return;
  }
  out.push_back('"');
  for (char c : label) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
}

// min_prec: 0 union context, 1 concat context, 2 star/atom context.
void print_re(std::string& out, const RegexNode* r, int min_prec, bool left_of_concat) {
  switch (r->kind) {
    case RegexKind::Empty:
      out += "%0";
      return;
    case RegexKind::Epsilon:
      out += "%e";
      return;
    case RegexKind::Sym:
      print_sym(out, r->label);
      return;
    case RegexKind::Union: {
      bool par = min_prec > 0;
      if (par) out.push_back('(');
      print_re(out, r->left.get(), 0, false);
      out.push_back('+');
      print_re(out, r->right.get(), 1, false);
      if (par) out.push_back(')');
      return;
    }
    case RegexKind::Concat: {
      bool par = min_prec > 1;
      if (par) out.push_back('(');
      print_re(out, r->left.get(), 1, true);
      print_re(out, r->right.get(), 2, false);
      if (par) out.push_back(')');
      return;
    }
    case RegexKind::Star: {
      bool par_child = !is_atom(r->left.get()) || left_of_concat;
      if (par_child) out.push_back('(');
      print_re(out, r->left.get(), par_child ? 0 : 2, false);
      if (par_child) out.push_back(')');
      out.push_back('*');
      return;
    }
  }
}

// min_prec: 0 union context, 1 concat context, 2 atom context.
void print_om(std::string& out, const OmegaNode* e, int min_prec) {
  switch (e->kind) {
    case OmegaKind::EmptyOmega:
      out += "%0^w";
      return;
    case OmegaKind::Iter:
      out.push_back('(');
      print_re(out, e->fin.get(), 0, false);
      out += ")^w";
      return;
    case OmegaKind::ConcatFin: {
      bool par = min_prec > 1;
      if (par) out.push_back('(');
      print_re(out, e->fin.get(), 1, false);
      if (e->left->kind == OmegaKind::Iter) {
        print_om(out, e->left.get(), 2);
      } else {
        out.push_back('(');
        print_om(out, e->left.get(), 0);
        out.push_back(')');
      }
      if (par) out.push_back(')');
      return;
    }
    case OmegaKind::UnionOmega: {
      bool par = min_prec > 0;
      if (par) out.push_back('(');
      print_om(out, e->left.get(), 0);
      out.push_back('+');
      print_om(out, e->right.get(), 1);
      if (par) out.push_back(')');
      return;
    }
  }
}

}  // namespace

std::string to_text(const Regex& r) {
  std::string out;
  print_re(out, r.get(), 0, false);
  return out;
}

std::string to_text(const OmegaRegex& e) {
  std::string out;
  print_om(out, e.get(), 0);
  return out;
}

namespace detail {

Regex raw_node(RegexKind kind, std::string label, Regex left, Regex right) {
  bool nul = false;
  switch (kind) {
    case RegexKind::Epsilon:
    case RegexKind::Star:
      nul = true;
      break;
    case RegexKind::Union:
      nul = left->nullable || right->nullable;
      break;
    case RegexKind::Concat:
      nul = left->nullable && right->nullable;
      break;
    default:
      break;
  }
  return node(kind, std::move(label), std::move(left), std::move(right), nul);
}

OmegaRegex raw_omega_node(OmegaKind kind, Regex fin, OmegaRegex left, OmegaRegex right) {
  return omega_node(kind, std::move(fin), std::move(left), std::move(right));
}

}  // namespace detail

}  // namespace omegasynth
