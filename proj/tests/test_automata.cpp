#include <doctest.h>

#include "omegasynth/automata.hpp"
#include "omegasynth/hoa.hpp"
#include "omegasynth/oracle.hpp"
#include "support/test_helpers.hpp"

using namespace omegasynth;
using namespace omegasynth::testing;

namespace {

Nba load_b1() { return parse_hoa(read_fixture("b1.hoa")); }

Nba two_state_complete_state_based() {
  Nba b;
  b.num_states = 2;
  b.alphabet = {"a"};
  b.initial = {0};
  b.acceptance_kind = AcceptanceKind::StateBased;
  b.accepting_states = {0, 1};
  for (StateId s = 0; s < 2; ++s)
    for (StateId d = 0; d < 2; ++d) b.transitions.push_back({s, 0, d, false});
  return b;
}

}  // namespace

TEST_CASE("accepting_source_states on B1 is {1,2}") {
  Nba b1 = load_b1();
  CHECK(accepting_source_states(b1) == std::set<StateId>{1, 2});
}

TEST_CASE("accepting_source_states: empty acceptance set") {
  Nba b = parse_hoa(read_fixture("empty.hoa"));
  CHECK(accepting_source_states(b).empty());
}

TEST_CASE("accepting_source_states: all transitions accepting equals outdegree scan") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Nba b = random_nba(seed, 4, 2, 0.5, 0.0);
    for (auto& t : b.transitions) t.accepting = true;
    std::set<StateId> expect;
    for (const auto& t : b.transitions) expect.insert(t.src);  // direct scan oracle
    CHECK(accepting_source_states(b) == expect);
  }
}

TEST_CASE("accepting_source_states rejects state-based input") {
  CHECK_THROWS_AS(accepting_source_states(two_state_complete_state_based()),
                  std::invalid_argument);
}

TEST_CASE("lift_state_based marks exactly the out-edges of accepting states") {
  Nba b;
  b.num_states = 3;
  b.alphabet = {"a", "b"};
  b.initial = {0};
  b.acceptance_kind = AcceptanceKind::StateBased;
  b.accepting_states = {2};
  b.transitions = {{0, 0, 2, false}, {2, 0, 2, false}, {2, 1, 0, false}, {1, 0, 2, false}};
  Nba lifted = lift_state_based(b);
  CHECK(lifted.acceptance_kind == AcceptanceKind::TransitionBased);
  CHECK(lifted.accepting_states.empty());
  int accepting = 0;
  for (const auto& t : lifted.transitions) {
    CHECK(t.accepting == (t.src == 2));
    if (t.accepting) ++accepting;
  }
  CHECK(accepting == 2);  // the self-loop and 2->0
}

TEST_CASE("lift_state_based: empty F gives empty Acc") {
  Nba b = two_state_complete_state_based();
  b.accepting_states.clear();
  Nba lifted = lift_state_based(b);
  for (const auto& t : lifted.transitions) CHECK(!t.accepting);
}

TEST_CASE("lift_state_based: complete relation with all states accepting") {
  Nba lifted = lift_state_based(two_state_complete_state_based());
  CHECK(lifted.transitions.size() == 4);
  for (const auto& t : lifted.transitions) CHECK(t.accepting);
  CHECK(accepting_source_states(lifted) == std::set<StateId>{0, 1});
}

TEST_CASE("lift_state_based rejects transition-based input") {
  CHECK_THROWS_AS(lift_state_based(load_b1()), std::invalid_argument);
}

TEST_CASE("degeneralize B1: bound and bounded-lasso language") {
  Nba b1 = load_b1();
  Nba d = degeneralize(b1);
  CHECK(d.acceptance_kind == AcceptanceKind::StateBased);
  CHECK(d.num_states <= 2 * b1.num_states);
  CHECK(bounded_equiv(b1, d, {4, 4}).equal);
}

TEST_CASE("degeneralize: empty acceptance set stays empty") {
  Nba b = parse_hoa(read_fixture("empty.hoa"));
  Nba d = degeneralize(b);
  CHECK(d.accepting_states.empty());
  CHECK(bounded_equiv(b, d, {4, 4}).equal);
}

TEST_CASE("degeneralize: all-accepting automaton lives in copy 1 after the first step") {
  Nba b = random_nba(7, 3, 2, 1.0, 1.0);
  REQUIRE(b.num_states == 3);
  Nba d = degeneralize(b);
  // Reachable targets of the original: every state with an incoming edge.
  std::set<StateId> targets;
  for (const auto& t : b.transitions) targets.insert(t.dst);
  CHECK(d.accepting_states.size() == targets.size());
  // Every transition lands in copy 1.
  for (const auto& t : d.transitions) CHECK(d.accepting_states.count(t.dst) == 1);
  CHECK(bounded_equiv(b, d, {4, 4}).equal);
}

TEST_CASE("degeneralize bound and language on random corpus") {
  for (std::uint64_t seed = 20; seed < 40; ++seed) {
    Nba b = random_nba(seed, 4, 2, 0.45, 0.4);
    Nba d = degeneralize(b);
    CHECK(d.num_states <= 2 * b.num_states);
    CHECK(bounded_equiv(b, d, {4, 4}).equal);
  }
}

TEST_CASE("degeneralize rejects state-based input") {
  CHECK_THROWS_AS(degeneralize(two_state_complete_state_based()), std::invalid_argument);
}

TEST_CASE("trim is the identity on B1") {
  Nba b1 = load_b1();
  Nba t = trim(b1);
  CHECK(t.num_states == b1.num_states);
  CHECK(t.transitions == b1.transitions);
  CHECK(t.initial == b1.initial);
}

TEST_CASE("trim removes an unreachable accepting loop") {
  Nba b = load_b1();
  b.num_states = 4;
  b.transitions.push_back({3, 0, 3, true});  // unreachable accepting self-loop
  Nba t = trim(b);
  CHECK(t.num_states == 3);
  CHECK(t.transitions.size() == 6);
  CHECK(bounded_equiv(b, t, {4, 4}).equal);
}

TEST_CASE("trim preserves the bounded-lasso language of random automata") {
  for (std::uint64_t seed = 50; seed < 60; ++seed) {
    Nba b = random_nba(seed, 6, 2, 0.3, 0.4);
    // random_nba already trims; graft an unreachable component back on.
    Nba padded = b;
    padded.num_states += 2;
    padded.transitions.push_back({b.num_states, 0, b.num_states + 1, true});
    padded.transitions.push_back({b.num_states + 1, 0, b.num_states, false});
    Nba t = trim(padded);
    CHECK(t.num_states == b.num_states);
    CHECK(bounded_equiv(padded, t, {4, 4}).equal);
  }
}

TEST_CASE("validate rejects broken invariants") {
  Nba b = load_b1();
  SUBCASE("transition-based with accepting states") {
    b.accepting_states = {1};
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
  }
  SUBCASE("state-based with accepting transition") {
    b.acceptance_kind = AcceptanceKind::StateBased;
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
  }
  SUBCASE("dangling transition target") {
    b.transitions.push_back({0, 0, 9, false});
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
  }
  SUBCASE("initial state out of range") {
    b.initial.insert(7);
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
  }
  SUBCASE("duplicate alphabet label") {
    b.alphabet[1] = "a";
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
  }
}
