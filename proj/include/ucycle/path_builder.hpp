#pragma once

#include <string_view>
#include <vector>

#include "ucycle/function_class.hpp"
#include "ucycle/transition_graph.hpp"
#include "ucycle/word.hpp"

namespace ucycle {

/// How a step of a constructed path was reached.
enum class PathPhase {
  Source,              // the starting vertex
  BuildTarget,         // appended the next symbol of the target
  ForcedRun,           // left a degree-1 vertex along its only edge
  Rotation,            // cycled a full-degree vertex by one symbol
  ReintroduceMissing,  // forced step that lands back on a full-degree vertex
  BacktrackDerived,    // replaying the target's forced in-edges forward
};

std::string_view phase_name(PathPhase p);

struct PathTrace {
  ClassSpec spec;
  std::vector<Word> steps;
  std::vector<PathPhase> phases;  // phases[i] describes how steps[i] was reached
};

/// Walks from `source` to `target` in the onto graph (k > n) by greedily
/// spelling the target, escaping blocked almost-onto words through their
/// forced edges and rotating the resulting onto word until the spelled prefix
/// is back at the tail.
///
/// Throws UnsupportedSpec unless spec is onto with k > n, and InvalidArgument
/// when an endpoint is not an onto or almost-onto word of length k-1.
PathTrace connect_onto(const Word& source, const Word& target, const ClassSpec& spec);

/// Same construction in the one-inequitable graph (odd k >= 3), where
/// equitable vertices play the role of onto words and two-inequitable ones
/// the role of almost-onto words.
PathTrace connect_inequitable(const Word& source, const Word& target, const ClassSpec& spec);

/// True when every step is a vertex of g and consecutive steps are joined by an edge.
bool validate_trace(const PathTrace& trace, const TransitionGraph& g);

}  // namespace ucycle
