#pragma once

#include "omegasynth/automata.hpp"
#include "omegasynth/deadline.hpp"
#include "omegasynth/expr.hpp"

namespace omegasynth {

/// Order in which states are removed during state elimination.
/// LowestIndexFirst is fully reproducible from the input numbering;
/// FewestPathsFirst removes the state minimizing indegree*outdegree at each
/// step (ties by lowest id), which tends to give smaller expressions.
enum class EliminationOrder { LowestIndexFirst, FewestPathsFirst };

/// Synthesizes a regular expression with L(result) = L(nfa) by state
/// elimination over a generalized NFA with a fresh start and sink. States
/// unreachable from the initial set or unable to reach an accepting state
/// are dropped first; when no accepting state survives the result is the
/// empty language.
Regex nfa_to_regex(const Nfa& nfa, EliminationOrder order = EliminationOrder::LowestIndexFirst,
                   const Deadline& deadline = Deadline::never());

}  // namespace omegasynth
