#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "cheese/geometry.hpp"

namespace cheese {

/// One outer closed disc plus a finite ordered sequence of removed open
/// discs. The associated plane set is the outer disc minus the union of the
/// open discs. Disc order is significant and preserved by every operation.
struct SwissCheese {
  ClosedDisc outer;
  std::vector<OpenDisc> discs;

  friend bool operator==(const SwissCheese&, const SwissCheese&) = default;
};

enum class Verdict { Classical, SemiclassicalOnly, Neither };

/// Closures of discs i and j meet (i < j).
struct OverlapPair {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const OverlapPair&, const OverlapPair&) = default;
};

/// Closure of disc i is not strictly inside the interior of the outer disc.
struct PokesOut {
  std::size_t i = 0;

  friend bool operator==(const PokesOut&, const PokesOut&) = default;
};

/// Cannot occur for a finite disc sequence; kept so the report schema covers
/// truncations of countable cheeses.
struct RadiusSumUnbounded {
  friend bool operator==(const RadiusSumUnbounded&, const RadiusSumUnbounded&) = default;
};

using ClassicalityViolation = std::variant<OverlapPair, PokesOut, RadiusSumUnbounded>;

/// Violations are always against the classical test, listed deterministically:
/// every OverlapPair in lexicographic (i, j) order, then every PokesOut by
/// index. verdict == Classical iff violations is empty.
struct ClassicalityReport {
  Verdict verdict = Verdict::Neither;
  std::vector<ClassicalityViolation> violations;
  double radius_sum = 0.0;
  double delta = 0.0;
};

/// Finitely checkable side of the carpet criterion. Empty interior is not
/// decidable from finite data; area_deficit is reported as a heuristic only.
struct CarpetReport {
  bool pairwise_disjoint_closures = false;
  bool closures_inside_interior = false;
  double max_disc_radius = 0.0;
  double area_deficit = 0.0;
};

/// Drops radius-0 discs (they denote the empty set), preserving order.
SwissCheese normalize(const SwissCheese& c);

/// Radius margin: r(outer) minus the sum of the removed disc radii.
double delta(const SwissCheese& c);

ClassicalityReport classify(const SwissCheese& c, Tolerance tol = {});

/// p lies in the cheese set: inside the closed outer disc and in no open disc.
bool contains_point(const SwissCheese& c, Point p);

CarpetReport whyburn_report(const SwissCheese& c, Tolerance tol = {});

}  // namespace cheese
