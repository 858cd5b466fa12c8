#pragma once

#include <cmath>
#include <vector>

#include "cheese/cheese.hpp"
#include "cheese/generate.hpp"
#include "cheese/geometry.hpp"

namespace testsupport {

inline cheese::OpenDisc disc(double cx, double cy, double r) { return {{cx, cy}, r}; }
inline cheese::ClosedDisc cdisc(double cx, double cy, double r) { return {{cx, cy}, r}; }

inline cheese::SwissCheese make_cheese(cheese::ClosedDisc outer,
                                       std::vector<cheese::OpenDisc> discs) {
  return {outer, std::move(discs)};
}

/// Uniform point in the square [cx - half, cx + half]^2.
inline cheese::Point sample_square(cheese::SplitMix64& rng, double cx, double cy, double half) {
  return {cx + (2.0 * rng.next_double() - 1.0) * half,
          cy + (2.0 * rng.next_double() - 1.0) * half};
}

/// Uniform point in a disc, via rejection.
inline cheese::Point sample_disc(cheese::SplitMix64& rng, cheese::Point center, double radius) {
  for (;;) {
    const cheese::Point p = sample_square(rng, center.x, center.y, radius);
    const double dx = p.x - center.x;
    const double dy = p.y - center.y;
    if (dx * dx + dy * dy <= radius * radius) {
      return p;
    }
  }
}

/// A pair of random discs whose closures intersect.
inline std::pair<cheese::OpenDisc, cheese::OpenDisc> sample_intersecting_pair(
    cheese::SplitMix64& rng) {
  for (;;) {
    const cheese::OpenDisc a{sample_square(rng, 0.0, 0.0, 2.0), 0.05 + rng.next_double()};
    const cheese::OpenDisc b{sample_square(rng, 0.0, 0.0, 2.0), 0.05 + rng.next_double()};
    if (cheese::closures_intersect(a, b)) {
      return {a, b};
    }
  }
}

}  // namespace testsupport
