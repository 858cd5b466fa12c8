#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "cheese/allocation.hpp"
#include "cheese/cheese.hpp"

namespace cheese {

using Violation = std::variant<OverlapPair, PokesOut>;

/// One classicalisation move. The after-cheese always has exactly one disc
/// fewer than the before-cheese, and map certifies the move (map.source ==
/// before, map.target == after, axioms pass).
struct Step {
  Violation violation;
  SwissCheese before;
  SwissCheese after;
  AllocationMap map;
};

/// An ordered run of moves together with the composed overall map.
struct Trace {
  std::vector<Step> steps;
  AllocationMap overall;
};

struct ClassicalisationResult {
  SwissCheese cheese;
  Trace trace;
};

/// The deterministically-first violation of the classical conditions:
/// all overlap pairs in lexicographic (i, j) order come before any
/// poke-out, poke-outs in index order. Empty iff classify() is classical.
std::optional<Violation> find_violation(const SwissCheese& c, Tolerance tol = {});

/// Replace discs i and j (intersecting closures) by their merge, placed at
/// position min(i, j). The step map sends both to the merged disc and shifts
/// the remaining indices down past max(i, j).
Step step_merge(const SwissCheese& c, std::size_t i, std::size_t j, Tolerance tol = {});

/// Remove protruding disc i and replace the outer disc by the largest
/// closed sub-disc disjoint from it. The step map sends disc i and the old
/// complement to the new complement.
Step step_shrink(const SwissCheese& c, std::size_t i, Tolerance tol = {});

/// Repeatedly fix the first violation until the cheese is classical.
/// Requires a normalized cheese with delta > 0 (HypothesisError otherwise).
/// Terminates in at most |discs| steps since every step removes one disc;
/// delta never drops by more than tau per step.
ClassicalisationResult classicalise(const SwissCheese& c, Tolerance tol = {});

/// Serialized form of a step: kind plus the indices it acted on plus the
/// resulting cheese. Enough to replay the move deterministically.
struct StepRecord {
  bool is_merge = true;
  std::vector<std::size_t> indices;
  SwissCheese after;
};

/// Serialized form of a trace (what the trace JSON file carries).
struct TraceRecord {
  std::vector<StepRecord> steps;
  std::vector<Region> overall_disc_targets;
};

/// Certificate verification: replay the recorded steps from source, compare
/// each recomputed after-cheese with the stored one, recompose the step maps
/// and compare with the stored overall assignment, then check the stored
/// overall map's axioms.
struct TraceCheck {
  bool steps_consistent = false;
  bool overall_consistent = false;
  bool structurally_valid = false;
  AxiomReport axioms;
  bool pass = false;
};

TraceCheck check_trace(const SwissCheese& source, const TraceRecord& rec, Tolerance tol = {});

}  // namespace cheese
