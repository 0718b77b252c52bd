#include "omegasynth/hoa.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "omegasynth/errors.hpp"

namespace omegasynth {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  int line;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  int parse_int(const char* what) {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError(line, std::string("expected ") + what);
    long v = 0;
    for (size_t i = start; i < pos; ++i) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) throw ParseError(line, std::string(what) + " too large");
    }
    return static_cast<int>(v);
  }
  std::string parse_quoted(const char* what) {
    skip_ws();
    if (pos >= s.size() || s[pos] != '"')
      throw ParseError(line, std::string("expected quoted ") + what);
    ++pos;
    std::string out;
    while (pos < s.size() && s[pos] != '"') {
      if (s[pos] == '\\' && pos + 1 < s.size()) {
        ++pos;
        out.push_back(s[pos]);
      } else {
        out.push_back(s[pos]);
      }
      ++pos;
    }
    if (pos >= s.size()) throw ParseError(line, std::string("unterminated quoted ") + what);
    ++pos;
    return out;
  }
  void expect_end(const char* where) {
    if (!at_end()) throw ParseError(line, std::string("unexpected trailing text in ") + where);
  }
};

// Normalizes a label formula: strips whitespace and leading zeros of AP
// indices, so syntactically equal formulas map to the same symbol.
std::string normalize_label(const std::string& raw, int line) {
  std::string out;
  size_t i = 0;
  while (i < raw.size()) {
    char c = raw[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < raw.size() && std::isdigit(static_cast<unsigned char>(raw[i]))) ++i;
      std::string num = raw.substr(start, i - start);
      size_t nz = num.find_first_not_of('0');
      out += (nz == std::string::npos) ? "0" : num.substr(nz);
    } else {
      out.push_back(c);
      ++i;
    }
  }
  if (out.empty()) throw ParseError(line, "empty edge label");
  return out;
}

// Display text: the normalized formula with AP indices replaced by names.
std::string display_label(const std::string& normalized, const std::vector<std::string>& aps,
                          int line) {
  std::string out;
  size_t i = 0;
  while (i < normalized.size()) {
    if (std::isdigit(static_cast<unsigned char>(normalized[i]))) {
      size_t start = i;
      long idx = 0;
      while (i < normalized.size() && std::isdigit(static_cast<unsigned char>(normalized[i]))) {
        idx = idx * 10 + (normalized[i] - '0');
        if (idx > 1000000) throw ParseError(line, "atomic proposition index too large");
        ++i;
      }
      (void)start;
      if (idx >= static_cast<long>(aps.size()))
        throw ParseError(line, "atomic proposition index " + std::to_string(idx) + " out of range");
      out += aps[static_cast<size_t>(idx)];
    } else {
      out.push_back(normalized[i]);
      ++i;
    }
  }
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// Parses an optional acceptance-set signature `{0}`. Returns true when the
// mark is present.
bool parse_acc_sig(Cursor& cur) {
  if (!cur.eat('{')) return false;
  int set = cur.parse_int("acceptance set index");
  if (set != 0) throw ParseError(cur.line, "acceptance set " + std::to_string(set) +
                                               " out of range for Buchi");
  if (!cur.eat('}')) throw ParseError(cur.line, "expected '}' after acceptance set");
  return true;
}

struct HeaderState {
  std::optional<int> num_states;
  std::vector<std::pair<StateId, int>> start;  // state, line
  std::optional<std::vector<std::string>> aps;
  bool acceptance_seen = false;
  bool hoa_seen = false;
};

}  // namespace

Nba parse_hoa(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur.push_back(c);
      }
    }
    lines.push_back(cur);
  }

  HeaderState hdr;
  size_t li = 0;
  auto line_no = [&]() { return static_cast<int>(li + 1); };

  // Header section.
  bool body_reached = false;
  for (; li < lines.size(); ++li) {
    Cursor cur{lines[li], 0, line_no()};
    if (cur.at_end()) continue;
    const std::string& l = lines[li];
    size_t first = l.find_first_not_of(" \t");
    std::string trimmed = l.substr(first);
    while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t'))
      trimmed.pop_back();
    if (trimmed == "--BODY--") {
      body_reached = true;
      ++li;
      break;
    }
    size_t colon = trimmed.find(':');
    if (colon == std::string::npos)
      throw ParseError(line_no(), "expected a 'key: value' header item or --BODY--");
    std::string key = trimmed.substr(0, colon);
    Cursor val{lines[li], first + colon + 1, line_no()};

    if (!hdr.hoa_seen) {
      if (key != "HOA") throw ParseError(line_no(), "input must begin with 'HOA: v1'");
      val.skip_ws();
      if (lines[li].substr(val.pos, 2) != "v1")
        throw ParseError(line_no(), "unsupported HOA version");
      val.pos += 2;
      val.expect_end("HOA header");
      hdr.hoa_seen = true;
      continue;
    }
    if (key == "HOA") throw ParseError(line_no(), "duplicate HOA header");
    if (key == "States") {
      if (hdr.num_states) throw ParseError(line_no(), "duplicate States header");
      hdr.num_states = val.parse_int("state count");
      val.expect_end("States header");
    } else if (key == "Start") {
      int s = val.parse_int("initial state");
      val.expect_end("Start header");
      hdr.start.emplace_back(s, line_no());
    } else if (key == "AP") {
      if (hdr.aps) throw ParseError(line_no(), "duplicate AP header");
      int n = val.parse_int("AP count");
      std::vector<std::string> aps;
      for (int i = 0; i < n; ++i) {
        std::string name = val.parse_quoted("AP name");
        if (name.empty()) throw ParseError(line_no(), "empty atomic proposition name");
        aps.push_back(std::move(name));
      }
      val.expect_end("AP header");
      for (size_t i = 0; i < aps.size(); ++i)
        for (size_t j = i + 1; j < aps.size(); ++j)
          if (aps[i] == aps[j])
            throw ParseError(line_no(), "duplicate atomic proposition name '" + aps[i] + "'");
      hdr.aps = std::move(aps);
    } else if (key == "acc-name") {
      val.skip_ws();
      std::string name = lines[li].substr(val.pos);
      while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
      if (name != "Buchi")
        throw UnsupportedAcceptanceError(line_no(), "unsupported acc-name '" + name + "'");
    } else if (key == "Acceptance") {
      if (hdr.acceptance_seen) throw ParseError(line_no(), "duplicate Acceptance header");
      hdr.acceptance_seen = true;
      std::string cond = lines[li].substr(val.pos);
      std::string packed;
      for (char c : cond)
        if (c != ' ' && c != '\t') packed.push_back(c);
      if (packed != "1Inf(0)")
        throw UnsupportedAcceptanceError(line_no(), "unsupported acceptance condition '" + cond +
                                                        "' (only '1 Inf(0)' is supported)");
    } else {
      // Unknown header item (tool:, name:, properties:, ...): ignored.
    }
  }
  if (!body_reached) throw ParseError(line_no(), "missing --BODY--");
  if (!hdr.hoa_seen) throw ParseError(1, "input must begin with 'HOA: v1'");
  if (!hdr.num_states) throw ParseError(line_no(), "missing States header");
  if (!hdr.acceptance_seen) throw ParseError(line_no(), "missing Acceptance header");

  Nba out;
  out.num_states = *hdr.num_states;
  std::vector<std::string> aps = hdr.aps.value_or(std::vector<std::string>{});
  for (auto [q, at] : hdr.start) {
    if (q < 0 || q >= out.num_states) throw ParseError(at, "initial state out of range");
    out.initial.insert(q);
  }

  std::map<std::string, SymbolId> symbol_of;  // keyed by normalized formula
  auto intern = [&](const std::string& raw, int line) -> SymbolId {
    std::string norm = normalize_label(raw, line);
    auto it = symbol_of.find(norm);
    if (it != symbol_of.end()) return it->second;
    std::string disp = display_label(norm, aps, line);
    for (const auto& existing : out.alphabet)
      if (existing == disp)
        throw ParseError(line, "label '" + norm + "' displays as '" + disp +
                                   "' which collides with another label");
    SymbolId id = static_cast<SymbolId>(out.alphabet.size());
    out.alphabet.push_back(disp);
    symbol_of.emplace(norm, id);
    return id;
  };

  bool edge_marks = false;
  bool state_marks = false;
  std::vector<bool> state_seen(static_cast<size_t>(out.num_states), false);
  std::set<StateId> marked_states;

  int cur_state = -1;
  std::optional<SymbolId> cur_state_label;
  bool end_reached = false;

  for (; li < lines.size(); ++li) {
    Cursor cur{lines[li], 0, line_no()};
    if (cur.at_end()) continue;
    cur.skip_ws();
    const std::string& l = lines[li];

    if (l.compare(cur.pos, 7, "--END--") == 0) {
      cur.pos += 7;
      cur.expect_end("--END--");
      end_reached = true;
      ++li;
      break;
    }

    if (l.compare(cur.pos, 6, "State:") == 0) {
      cur.pos += 6;
      cur_state_label.reset();
      if (cur.eat('[')) {
        size_t close = l.find(']', cur.pos);
        if (close == std::string::npos) throw ParseError(line_no(), "unterminated state label");
        cur_state_label = intern(l.substr(cur.pos, close - cur.pos), line_no());
        cur.pos = close + 1;
      }
      int q = cur.parse_int("state id");
      if (q < 0 || q >= out.num_states)
        throw ParseError(line_no(), "state id " + std::to_string(q) + " out of range");
      if (state_seen[static_cast<size_t>(q)])
        throw ParseError(line_no(), "duplicate State section for state " + std::to_string(q));
      state_seen[static_cast<size_t>(q)] = true;
      cur_state = q;
      cur.skip_ws();
      if (cur.pos < l.size() && l[cur.pos] == '"') cur.parse_quoted("state name");
      if (parse_acc_sig(cur)) {
        state_marks = true;
        marked_states.insert(q);
        if (edge_marks)
          throw ParseError(line_no(), "mixed state and edge acceptance marks");
      }
      cur.expect_end("State line");
      continue;
    }

    // Edge line. With a labeled state the label is implicit.
    if (cur_state < 0) throw ParseError(line_no(), "edge before any State section");
    SymbolId sym;
    if (cur.pos < l.size() && l[cur.pos] == '[') {
      if (cur_state_label)
        throw ParseError(line_no(), "edge label not allowed after a labeled state");
      ++cur.pos;
      size_t close = l.find(']', cur.pos);
      if (close == std::string::npos) throw ParseError(line_no(), "unterminated edge label");
      sym = intern(l.substr(cur.pos, close - cur.pos), line_no());
      cur.pos = close + 1;
    } else if (cur_state_label) {
      sym = *cur_state_label;
    } else {
      throw ParseError(line_no(), "edge without a label");
    }
    int dst = cur.parse_int("destination state");
    if (dst < 0 || dst >= out.num_states)
      throw ParseError(line_no(), "destination state " + std::to_string(dst) + " out of range");
    bool acc = parse_acc_sig(cur);
    if (acc) {
      edge_marks = true;
      if (state_marks) throw ParseError(line_no(), "mixed state and edge acceptance marks");
    }
    cur.expect_end("edge line");
    Transition t;
    t.src = cur_state;
    t.sym = sym;
    t.dst = dst;
    t.accepting = acc;
    out.transitions.push_back(t);
  }
  if (!end_reached) throw ParseError(line_no(), "missing --END--");
  for (; li < lines.size(); ++li) {
    Cursor cur{lines[li], 0, line_no()};
    if (!cur.at_end()) throw ParseError(line_no(), "unexpected text after --END--");
  }

  if (state_marks) {
    out.acceptance_kind = AcceptanceKind::StateBased;
    out.accepting_states = marked_states;
    for (auto& t : out.transitions) t.accepting = false;
  } else {
    out.acceptance_kind = AcceptanceKind::TransitionBased;
  }

  // When every label is a bare AP index, the AP table *is* the alphabet:
  // keep its order and its unused entries so emit/parse round-trips exactly.
  if (hdr.aps) {
    bool plain = true;
    for (const auto& [norm, id] : symbol_of) {
      (void)id;
      for (char c : norm)
        if (!std::isdigit(static_cast<unsigned char>(c))) plain = false;
    }
    if (plain) {
      std::vector<SymbolId> remap(out.alphabet.size(), 0);
      for (const auto& [norm, id] : symbol_of) remap[static_cast<size_t>(id)] = std::stoi(norm);
      for (auto& t : out.transitions) t.sym = remap[static_cast<size_t>(t.sym)];
      out.alphabet = aps;
    }
  }
  try {
    out.validate();
  } catch (const std::invalid_argument& e) {
    // Anything the line-level checks missed still surfaces as a parse error.
    throw ParseError(line_no(), e.what());
  }
  return out;
}

namespace {

void emit_header(std::ostringstream& os, int num_states, const std::set<StateId>& initial,
                 const std::vector<std::string>& alphabet) {
  os << "HOA: v1\n";
  os << "States: " << num_states << "\n";
  for (StateId q : initial) os << "Start: " << q << "\n";
  os << "AP: " << alphabet.size();
  for (const auto& l : alphabet) os << " " << quote(l);
  os << "\n";
  os << "acc-name: Buchi\n";
  os << "Acceptance: 1 Inf(0)\n";
  os << "--BODY--\n";
}

}  // namespace

std::string emit_hoa(const Nba& b) {
  std::ostringstream os;
  emit_header(os, b.num_states, b.initial, b.alphabet);
  bool state_based = b.acceptance_kind == AcceptanceKind::StateBased;
  for (StateId q = 0; q < b.num_states; ++q) {
    os << "State: " << q;
    if (state_based && b.accepting_states.count(q)) os << " {0}";
    os << "\n";
    for (const auto& t : b.transitions) {
      if (t.src != q) continue;
      os << "[" << t.sym << "] " << t.dst;
      if (!state_based && t.accepting) os << " {0}";
      os << "\n";
    }
  }
  os << "--END--\n";
  return os.str();
}

std::string emit_hoa(const Nfa& a) {
  std::ostringstream os;
  emit_header(os, a.num_states, a.initial, a.alphabet);
  for (StateId q = 0; q < a.num_states; ++q) {
    os << "State: " << q;
    if (a.accepting.count(q)) os << " {0}";
    os << "\n";
    for (const auto& t : a.transitions)
      if (t.src == q) os << "[" << t.sym << "] " << t.dst << "\n";
  }
  os << "--END--\n";
  return os.str();
}

}  // namespace omegasynth
