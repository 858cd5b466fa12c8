#pragma once

#include <cstdint>

#include "cheese/cheese.hpp"

namespace cheese {

/// splitmix64. Fixed by algorithm, not platform: the same seed yields the
/// same stream everywhere. Doubles carry the top 53 bits into [0, 1).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double next_double();  // [0, 1)

 private:
  std::uint64_t state_;
};

/// Carpet recursion depth. The disc count grows as (8^K - 1) / 7.
struct CarpetParams {
  int levels = 1;  // 0 <= levels <= 6
};

struct RandomParams {
  std::size_t count = 0;
  std::uint64_t seed = 0;
  double radius_budget = 0.5;  // in (0, 1); the margin stays 1 - budget > 0
  double overlap_bias = 0.0;   // in [0, 1]
};

enum class AdversarialKind { NestedTower, TangentChain, ProtrudingFan };

/// Discs inscribed in the removed squares of the middle-ninth carpet
/// construction, one per surviving cell, ordered by level then cell row
/// then cell column. The outer disc circumscribes the unit square.
SwissCheese carpet_cheese(const CarpetParams& p);

/// Seed-deterministic cheese in the closed unit disc: `count` discs whose
/// radii split radius_budget Dirichlet-style, centers uniform in the outer
/// disc except that with probability overlap_bias a center is planted next
/// to an existing disc, close enough that the closures intersect. Uses no
/// transcendental libm calls, so output is bit-identical across platforms.
SwissCheese random_cheese(const RandomParams& p);

/// Stress families: n concentric discs of halving radii (merge containment),
/// n unit-radius discs with tangent closures (tie-breaking), or n discs of
/// radius 1/n straddling the outer boundary at equal angles (shrink chains).
SwissCheese adversarial_cheese(AdversarialKind kind, int n);

}  // namespace cheese
