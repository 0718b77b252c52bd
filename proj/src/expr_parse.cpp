#include "omegasynth/expr_parse.hpp"

#include <cctype>

#include "omegasynth/errors.hpp"

namespace omegasynth {

namespace {

bool plain_symbol_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

struct Parser {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw SyntaxError(static_cast<int>(pos), what);
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  bool peek_omega() {
    skip_ws();
    return pos + 1 < s.size() && s[pos] == '^' && s[pos + 1] == 'w';
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) fail(what);
    ++pos;
  }

  // True when the upcoming token can begin a finite primary.
  bool at_primary() {
    skip_ws();
    if (pos >= s.size()) return false;
    char c = s[pos];
    return plain_symbol_char(c) || c == '"' || c == '(' || c == '%';
  }

  std::string parse_symbol_token() {
    skip_ws();
    if (s[pos] == '"') {
      ++pos;
      std::string label;
      while (pos < s.size() && s[pos] != '"') {
        if (s[pos] == '\\' && pos + 1 < s.size()) ++pos;
        label.push_back(s[pos]);
        ++pos;
      }
      if (pos >= s.size()) fail("unterminated quoted symbol");
      ++pos;
      if (label.empty()) fail("empty quoted symbol");
      return label;
    }
    return std::string(1, s[pos++]);
  }

  // Finds the offset just past the ')' matching the '(' at `open`.
  size_t matching_paren(size_t open) {
    int depth = 0;
    bool quoted = false;
    for (size_t i = open; i < s.size(); ++i) {
      char c = s[i];
      if (quoted) {
        if (c == '\\') ++i;
        else if (c == '"') quoted = false;
        continue;
      }
      if (c == '"') quoted = true;
      else if (c == '(') ++depth;
      else if (c == ')') {
        if (--depth == 0) return i + 1;
      }
    }
    pos = open;
    fail("unbalanced parenthesis");
  }

  Regex parse_primary() {
    skip_ws();
    if (pos >= s.size()) fail("expected expression");
    char c = s[pos];
    if (c == '%') {
      if (pos + 1 >= s.size()) fail("expected 'e' or '0' after '%'");
      char k = s[pos + 1];
      pos += 2;
      if (k == 'e') return make_epsilon();
      if (k == '0') return make_empty();
      pos -= 1;
      fail("expected 'e' or '0' after '%'");
    }
    if (c == '(') {
      ++pos;
      Regex inner = parse_union();
      expect(')', "expected ')'");
      return inner;
    }
    if (plain_symbol_char(c) || c == '"') return make_sym(parse_symbol_token());
    fail("expected expression");
  }

  Regex parse_postfix(Regex r) {
    while (peek_is('*')) {
      ++pos;
      r = make_star(std::move(r));
    }
    return r;
  }

  Regex parse_concat() {
    Regex r = parse_postfix(parse_primary());
    while (at_primary()) r = make_concat(std::move(r), parse_postfix(parse_primary()));
    return r;
  }

  Regex parse_union() {
    Regex r = parse_concat();
    while (peek_is('+')) {
      ++pos;
      r = make_union(std::move(r), parse_concat());
    }
    return r;
  }

  // One union branch of an omega expression: finite factors followed by an
  // omega atom (either X^w or a parenthesized omega group).
  OmegaRegex parse_omega_term() {
    Regex prefix = make_epsilon();
    while (true) {
      skip_ws();
      if (pos >= s.size()) fail("expected omega iteration '^w'");
      char c = s[pos];
      if (c == '(') {
        size_t after = matching_paren(pos);
        size_t save = pos;
        // Decide what the group is from the token that follows it.
        size_t look = after;
        while (look < s.size() && std::isspace(static_cast<unsigned char>(s[look]))) ++look;
        bool followed_by_star = look < s.size() && s[look] == '*';
        bool followed_by_omega = look + 1 < s.size() && s[look] == '^' && s[look + 1] == 'w';
        if (followed_by_star || followed_by_omega || (look < s.size() && s[look] != '+' &&
                                                      s[look] != ')')) {
          // Finite group: keep collecting factors / reach the ^w below.
          ++pos;
          Regex inner = parse_union();
          expect(')', "expected ')'");
          Regex f = parse_postfix(inner);
          if (peek_omega()) {
            pos += 2;
            return make_concat_fin(std::move(prefix), make_omega_iter(std::move(f)));
          }
          prefix = make_concat(std::move(prefix), std::move(f));
          continue;
        }
        // Omega group.
        pos = save + 1;
        OmegaRegex inner = parse_omega_union();
        expect(')', "expected ')'");
        return make_concat_fin(std::move(prefix), std::move(inner));
      }
      if (!at_primary()) fail("expected expression");
      Regex f = parse_postfix(parse_primary());
      if (peek_omega()) {
        pos += 2;
        return make_concat_fin(std::move(prefix), make_omega_iter(std::move(f)));
      }
      prefix = make_concat(std::move(prefix), std::move(f));
    }
  }

  OmegaRegex parse_omega_union() {
    OmegaRegex r = parse_omega_term();
    while (peek_is('+')) {
      ++pos;
      r = make_union_omega(std::move(r), parse_omega_term());
    }
    return r;
  }
};

}  // namespace

Regex parse_regex(const std::string& text) {
  Parser p{text};
  Regex r = p.parse_union();
  p.skip_ws();
  if (p.pos < text.size()) p.fail("unexpected trailing text");
  return r;
}

OmegaRegex parse_omega(const std::string& text) {
  Parser p{text};
  OmegaRegex r;
  try {
    r = p.parse_omega_union();
  } catch (const std::invalid_argument& e) {
    // Constructor invariant violations (nullable omega body) surface as
    // syntax errors with the current position.
    throw SyntaxError(static_cast<int>(p.pos), e.what());
  }
  p.skip_ws();
  if (p.pos < text.size()) p.fail("unexpected trailing text");
  return r;
}

}  // namespace omegasynth
