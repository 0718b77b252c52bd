#pragma once

#include <memory>
#include <string>

namespace omegasynth {

enum class RegexKind { Empty, Epsilon, Sym, Union, Concat, Star };

struct RegexNode;
using Regex = std::shared_ptr<const RegexNode>;

/// Immutable regular-expression node. Build only through the make_* helpers:
/// they keep trees normalized (no Empty below the root, no Epsilon under
/// Concat, Star(Empty)=Star(Epsilon)=Epsilon) and Union/Concat chains in
/// left-associative shape. Subtrees are shared, so a tree can be a DAG.
struct RegexNode {
  RegexKind kind;
  std::string label;  // Sym only
  Regex left;         // Union/Concat left, Star child
  Regex right;        // Union/Concat right
  bool nullable;      // epsilon in the denoted language

  ~RegexNode();
};

Regex make_empty();
Regex make_epsilon();
Regex make_sym(std::string label);
Regex make_union(Regex a, Regex b);
Regex make_concat(Regex a, Regex b);
Regex make_star(Regex a);

inline bool nullable(const Regex& r) { return r->nullable; }
bool equal(const Regex& a, const Regex& b);

enum class OmegaKind { EmptyOmega, Iter, ConcatFin, UnionOmega };

struct OmegaNode;
using OmegaRegex = std::shared_ptr<const OmegaNode>;

/// Immutable omega-regular expression node. Iter bodies never accept the
/// empty word; make_omega_iter enforces this.
struct OmegaNode {
  OmegaKind kind;
  Regex fin;         // Iter body, ConcatFin prefix
  OmegaRegex left;   // ConcatFin rest, UnionOmega left
  OmegaRegex right;  // UnionOmega right

  ~OmegaNode();
};

OmegaRegex make_empty_omega();
/// Throws std::invalid_argument when the body accepts the empty word.
OmegaRegex make_omega_iter(Regex body);
OmegaRegex make_concat_fin(Regex prefix, OmegaRegex rest);
OmegaRegex make_union_omega(OmegaRegex a, OmegaRegex b);

bool equal(const OmegaRegex& a, const OmegaRegex& b);

/// Compactness measures: syntax-tree node count, symbol count of the longest
/// star-once path, and Kleene-star nesting depth (omega iteration excluded).
struct Metrics {
  long long rpn = 0;
  long long tllen = 0;
  long long star_height = 0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

Metrics metrics(const Regex& r);
Metrics metrics(const OmegaRegex& e);

long long rpn(const Regex& r);
long long rpn(const OmegaRegex& e);
long long tllen(const Regex& r);
long long tllen(const OmegaRegex& e);
long long star_height(const Regex& r);
long long star_height(const OmegaRegex& e);

std::string to_text(const Regex& r);
std::string to_text(const OmegaRegex& e);

namespace detail {
/// Raw node factories that skip constructor normalization. Test scaffolding
/// for the defensive checks; not part of the public surface.
Regex raw_node(RegexKind kind, std::string label, Regex left, Regex right);
OmegaRegex raw_omega_node(OmegaKind kind, Regex fin, OmegaRegex left, OmegaRegex right);
}  // namespace detail

}  // namespace omegasynth
