#include <doctest.h>

#include <algorithm>

#include "omegasynth/errors.hpp"
#include "omegasynth/hoa.hpp"
#include "support/test_helpers.hpp"

using namespace omegasynth;
using namespace omegasynth::testing;

TEST_CASE("parse_hoa reads B1") {
  Nba b = parse_hoa(read_fixture("b1.hoa"));
  CHECK(b.num_states == 3);
  CHECK(b.alphabet == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(b.initial == std::set<StateId>{0});
  CHECK(b.acceptance_kind == AcceptanceKind::TransitionBased);
  CHECK(b.transitions.size() == 6);
  int accepting = 0;
  for (const auto& t : b.transitions)
    if (t.accepting) ++accepting;
  CHECK(accepting == 2);
  // The two accepting edges of the figure: 1 -d-> 2 and 2 -b-> 1.
  CHECK(std::count(b.transitions.begin(), b.transitions.end(), Transition{1, 3, 2, true}) == 1);
  CHECK(std::count(b.transitions.begin(), b.transitions.end(), Transition{2, 1, 1, true}) == 1);
}

TEST_CASE("parse_hoa: zero-state automaton") {
  Nba b = parse_hoa("HOA: v1\nStates: 0\nAcceptance: 1 Inf(0)\n--BODY--\n--END--\n");
  CHECK(b.num_states == 0);
  CHECK(b.transitions.empty());
}

TEST_CASE("parse_hoa rejects non-Buchi acceptance") {
  std::string text = "HOA: v1\nStates: 1\nStart: 0\nAP: 1 \"a\"\n"
                     "Acceptance: 2 Inf(0)&Inf(1)\n--BODY--\nState: 0\n[0] 0 {0}\n--END--\n";
  CHECK_THROWS_AS(parse_hoa(text), UnsupportedAcceptanceError);
}

TEST_CASE("parse_hoa rejects non-Buchi acc-name") {
  std::string text = "HOA: v1\nStates: 1\nacc-name: parity min even 2\n"
                     "Acceptance: 1 Inf(0)\n--BODY--\n--END--\n";
  CHECK_THROWS_AS(parse_hoa(text), UnsupportedAcceptanceError);
}

TEST_CASE("parse_hoa: state marks give a state-based automaton") {
  std::string text = "HOA: v1\nStates: 2\nStart: 0\nAP: 1 \"a\"\nAcceptance: 1 Inf(0)\n"
                     "--BODY--\nState: 0\n[0] 1\nState: 1 {0}\n[0] 0\n--END--\n";
  Nba b = parse_hoa(text);
  CHECK(b.acceptance_kind == AcceptanceKind::StateBased);
  CHECK(b.accepting_states == std::set<StateId>{1});
  for (const auto& t : b.transitions) CHECK(!t.accepting);
}

TEST_CASE("parse_hoa rejects mixed state and edge marks") {
  std::string text = "HOA: v1\nStates: 2\nStart: 0\nAP: 1 \"a\"\nAcceptance: 1 Inf(0)\n"
                     "--BODY--\nState: 0 {0}\n[0] 1 {0}\nState: 1\n[0] 0\n--END--\n";
  CHECK_THROWS_AS(parse_hoa(text), ParseError);
}

TEST_CASE("parse_hoa errors carry line numbers") {
  std::string text = "HOA: v1\nStates: 2\nStart: 0\nAP: 1 \"a\"\nAcceptance: 1 Inf(0)\n"
                     "--BODY--\nState: 0\n[0] 7\n--END--\n";
  try {
    parse_hoa(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 8);
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }
}

TEST_CASE("parse_hoa: labeled states imply edge labels") {
  std::string text = "HOA: v1\nStates: 1\nStart: 0\nAP: 1 \"a\"\nAcceptance: 1 Inf(0)\n"
                     "--BODY--\nState: [0] 0\n0 {0}\n--END--\n";
  Nba b = parse_hoa(text);
  CHECK(b.transitions.size() == 1);
  CHECK(b.transitions[0].accepting);
  CHECK(b.alphabet == std::vector<std::string>{"a"});
}

TEST_CASE("parse_hoa: compound label formulas are opaque symbols") {
  std::string text = "HOA: v1\nStates: 1\nStart: 0\nAP: 2 \"p\" \"q\"\nAcceptance: 1 Inf(0)\n"
                     "--BODY--\nState: 0\n[0 & !1] 0 {0}\n[0&!1] 0\n[1] 0\n--END--\n";
  Nba b = parse_hoa(text);
  // "0 & !1" and "0&!1" normalize to the same formula; "1" is separate.
  CHECK(b.alphabet == std::vector<std::string>{"p&!q", "q"});
  CHECK(b.transitions.size() == 3);
}

TEST_CASE("parse_hoa error cases") {
  CHECK_THROWS_AS(parse_hoa(""), ParseError);
  CHECK_THROWS_AS(parse_hoa("States: 1\nHOA: v1\n--BODY--\n--END--\n"), ParseError);
  CHECK_THROWS_AS(parse_hoa("HOA: v1\nStates: 1\n--BODY--\n--END--\n"), ParseError);  // no Acceptance
  CHECK_THROWS_AS(parse_hoa("HOA: v1\nStates: 1\nAcceptance: 1 Inf(0)\n--BODY--\n"), ParseError);
  CHECK_THROWS_AS(
      parse_hoa("HOA: v1\nStates: 1\nStart: 3\nAcceptance: 1 Inf(0)\n--BODY--\n--END--\n"),
      ParseError);
  CHECK_THROWS_AS(parse_hoa("HOA: v1\nStates: 1\nAcceptance: 1 Inf(0)\n--BODY--\nState: 0\n"
                            "[0] 0\n--END--\n"),
                  ParseError);  // AP index without AP header
  CHECK_THROWS_AS(parse_hoa("HOA: v1\nStates: 1\nAP: 1 \"a\"\nAcceptance: 1 Inf(0)\n"
                            "--BODY--\nState: 0\n[0] 0 {1}\n--END--\n"),
                  ParseError);  // acceptance set out of range
  CHECK_THROWS_AS(parse_hoa("HOA: v1\nStates: 2\nAP: 1 \"a\"\nAcceptance: 1 Inf(0)\n"
                            "--BODY--\nState: 0\nState: 0\n--END--\n"),
                  ParseError);  // duplicate state section
}

TEST_CASE("emit_hoa round-trips B1 exactly") {
  Nba b1 = parse_hoa(read_fixture("b1.hoa"));
  Nba again = parse_hoa(emit_hoa(b1));
  CHECK(again.num_states == b1.num_states);
  CHECK(again.alphabet == b1.alphabet);
  CHECK(again.initial == b1.initial);
  CHECK(again.acceptance_kind == b1.acceptance_kind);
  CHECK(again.transitions == b1.transitions);
}

TEST_CASE("emit_hoa puts marks on states for state-based automata") {
  Nba b;
  b.num_states = 2;
  b.alphabet = {"a"};
  b.initial = {0};
  b.acceptance_kind = AcceptanceKind::StateBased;
  b.accepting_states = {1};
  b.transitions = {{0, 0, 1, false}, {1, 0, 0, false}};
  std::string text = emit_hoa(b);
  CHECK(text.find("State: 1 {0}") != std::string::npos);
  CHECK(text.find("] 1 {0}") == std::string::npos);
  Nba again = parse_hoa(text);
  CHECK(again.acceptance_kind == AcceptanceKind::StateBased);
  CHECK(again.accepting_states == b.accepting_states);
  CHECK(again.transitions == b.transitions);
}

TEST_CASE("emit_hoa of an empty-alphabet automaton") {
  Nba b;
  b.num_states = 1;
  b.initial = {0};
  std::string text = emit_hoa(b);
  CHECK(text.find("AP: 0\n") != std::string::npos);
  Nba again = parse_hoa(text);
  CHECK(again.num_states == 1);
  CHECK(again.alphabet.empty());
}

TEST_CASE("emit_hoa quotes special characters in labels") {
  Nba b;
  b.num_states = 1;
  b.initial = {0};
  b.alphabet = {"p \"and\" q", "x\\y"};
  b.transitions = {{0, 0, 0, true}, {0, 1, 0, false}};
  Nba again = parse_hoa(emit_hoa(b));
  CHECK(again.alphabet == b.alphabet);
  CHECK(again.transitions == b.transitions);
}
