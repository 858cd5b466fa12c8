#include "cheese/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cheese/error.hpp"

namespace cheese {

std::uint64_t SplitMix64::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

namespace {

// Cell (m, n) at level k survives iff no base-3 digit position of the
// (k-1)-digit expansions has both digits equal to 1; otherwise the cell lies
// inside a square removed at an earlier level.
bool cell_survives(int m, int n, int level) {
  for (int i = 0; i < level - 1; ++i) {
    if (m % 3 == 1 && n % 3 == 1) {
      return false;
    }
    m /= 3;
    n /= 3;
  }
  return true;
}

Point draw_in_unit_disc(SplitMix64& rng) {
  for (;;) {
    const double x = 2.0 * rng.next_double() - 1.0;
    const double y = 2.0 * rng.next_double() - 1.0;
    if (x * x + y * y <= 1.0) {
      return {x, y};
    }
  }
}

Point draw_unit_vector(SplitMix64& rng) {
  for (;;) {
    const double x = 2.0 * rng.next_double() - 1.0;
    const double y = 2.0 * rng.next_double() - 1.0;
    const double s = x * x + y * y;
    if (s > 0.0 && s <= 1.0) {
      const double len = std::sqrt(s);
      return {x / len, y / len};
    }
  }
}

}  // namespace

SwissCheese carpet_cheese(const CarpetParams& p) {
  if (p.levels < 0 || p.levels > 6) {
    throw InvalidInputError("carpet_cheese: levels must be between 0 and 6");
  }

  SwissCheese c{ClosedDisc{{0.5, 0.5}, std::numbers::sqrt2 / 2.0}, {}};
  for (int k = 1; k <= p.levels; ++k) {
    double scale = 1.0;  // 3^k, exact in double for k <= 6
    for (int t = 0; t < k; ++t) {
      scale *= 3.0;
    }
    int cells = 1;  // 3^(k-1)
    for (int t = 0; t < k - 1; ++t) {
      cells *= 3;
    }
    for (int m = 0; m < cells; ++m) {
      for (int n = 0; n < cells; ++n) {
        if (!cell_survives(m, n, k)) {
          continue;
        }
        // disc inscribed in the removed square with corner (3m+1, 3n+1)/3^k
        // and side 1/3^k
        c.discs.push_back(OpenDisc{{(3.0 * m + 1.5) / scale, (3.0 * n + 1.5) / scale},
                                   0.5 / scale});
      }
    }
  }
  return c;
}

SwissCheese random_cheese(const RandomParams& p) {
  if (!(p.radius_budget > 0.0 && p.radius_budget < 1.0)) {
    throw InvalidInputError("random_cheese: radius_budget must lie in (0, 1)");
  }
  if (!(p.overlap_bias >= 0.0 && p.overlap_bias <= 1.0)) {
    throw InvalidInputError("random_cheese: overlap_bias must lie in [0, 1]");
  }

  SwissCheese c{ClosedDisc{{0.0, 0.0}, 1.0}, {}};
  if (p.count == 0) {
    return c;
  }

  SplitMix64 rng(p.seed);

  // Radii: spacings of count-1 sorted uniforms scaled by the budget, the
  // standard flat Dirichlet split. Redraw on the (practically impossible)
  // zero gap so no radius degenerates to 0.
  std::vector<double> radii;
  for (;;) {
    std::vector<double> cuts(p.count - 1);
    for (double& u : cuts) {
      u = rng.next_double();
    }
    std::sort(cuts.begin(), cuts.end());
    radii.assign(p.count, 0.0);
    double prev = 0.0;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < p.count; ++i) {
      radii[i] = (cuts[i] - prev) * p.radius_budget;
      ok = ok && radii[i] > 0.0;
      prev = cuts[i];
    }
    radii[p.count - 1] = (1.0 - prev) * p.radius_budget;
    ok = ok && radii[p.count - 1] > 0.0;
    if (ok) {
      break;
    }
  }

  // Centers, one draw block per disc in order: a bias coin first, then
  // either a plant next to an earlier disc or a uniform point in the outer
  // disc. Draw order is part of the format: changing it changes every seed.
  c.discs.reserve(p.count);
  for (std::size_t i = 0; i < p.count; ++i) {
    const double coin = rng.next_double();
    Point center;
    if (coin < p.overlap_bias && i > 0) {
      const auto j = static_cast<std::size_t>(rng.next_double() * static_cast<double>(i));
      const double reach = rng.next_double() * (c.discs[j].radius + radii[i]);
      const Point dir = draw_unit_vector(rng);
      center = {c.discs[j].center.x + reach * dir.x, c.discs[j].center.y + reach * dir.y};
    } else {
      center = draw_in_unit_disc(rng);
    }
    c.discs.push_back(OpenDisc{center, radii[i]});
  }
  return c;
}

SwissCheese adversarial_cheese(AdversarialKind kind, int n) {
  if (n < 1) {
    throw InvalidInputError("adversarial_cheese: n must be >= 1");
  }

  SwissCheese c;
  switch (kind) {
    case AdversarialKind::NestedTower:
      // radii 1, 1/2, 1/4, ... concentric; margin > 2 regardless of n
      c.outer = ClosedDisc{{0.0, 0.0}, 4.0};
      for (int k = 0; k < n; ++k) {
        c.discs.push_back(OpenDisc{{0.0, 0.0}, std::ldexp(1.0, -k)});
      }
      break;
    case AdversarialKind::TangentChain:
      // unit discs with tangent closures along the x axis; margin 1
      c.outer = ClosedDisc{{static_cast<double>(n - 1), 0.0}, static_cast<double>(n) + 1.0};
      for (int k = 0; k < n; ++k) {
        c.discs.push_back(OpenDisc{{2.0 * k, 0.0}, 1.0});
      }
      break;
    case AdversarialKind::ProtrudingFan:
      // discs of radius 1/n centered on the outer boundary; margin 1
      c.outer = ClosedDisc{{0.0, 0.0}, 2.0};
      for (int k = 0; k < n; ++k) {
        const double theta = (2.0 * std::numbers::pi * k) / n;
        c.discs.push_back(
            OpenDisc{{2.0 * std::cos(theta), 2.0 * std::sin(theta)}, 1.0 / n});
      }
      break;
  }
  return c;
}

}  // namespace cheese
