#include "cheese/cheese.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cheese/error.hpp"

namespace cheese {

namespace {

void require_valid(const SwissCheese& c, const char* op) {
  if (!std::isfinite(c.outer.center.x) || !std::isfinite(c.outer.center.y) ||
      !std::isfinite(c.outer.radius) || c.outer.radius <= 0.0) {
    throw InvalidInputError(std::string(op) + ": outer disc must be finite with radius > 0");
  }
  for (const OpenDisc& d : c.discs) {
    if (!std::isfinite(d.center.x) || !std::isfinite(d.center.y) || !std::isfinite(d.radius) ||
        d.radius < 0.0) {
      throw InvalidInputError(std::string(op) + ": discs must be finite with radius >= 0");
    }
  }
}

}  // namespace

SwissCheese normalize(const SwissCheese& c) {
  require_valid(c, "normalize");
  SwissCheese out{c.outer, {}};
  out.discs.reserve(c.discs.size());
  std::copy_if(c.discs.begin(), c.discs.end(), std::back_inserter(out.discs),
               [](const OpenDisc& d) { return d.radius > 0.0; });
  return out;
}

double delta(const SwissCheese& c) {
  double sum = 0.0;
  for (const OpenDisc& d : c.discs) {
    sum += d.radius;
  }
  return c.outer.radius - sum;
}

ClassicalityReport classify(const SwissCheese& c, Tolerance tol) {
  require_valid(c, "classify");
  ClassicalityReport rep;
  rep.radius_sum = 0.0;
  for (const OpenDisc& d : c.discs) {
    rep.radius_sum += d.radius;
  }
  rep.delta = c.outer.radius - rep.radius_sum;

  bool open_discs_disjoint = true;   // semiclassical pair condition
  bool closures_in_outer = true;     // semiclassical containment condition
  const std::size_t n = c.discs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (closures_intersect(c.discs[i], c.discs[j], tol)) {
        rep.violations.push_back(OverlapPair{i, j});
      }
      const double d = distance(c.discs[i].center, c.discs[j].center);
      if (d < c.discs[i].radius + c.discs[j].radius - tol.tau) {
        open_discs_disjoint = false;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!closure_inside_interior(c.discs[i], c.outer, tol)) {
      rep.violations.push_back(PokesOut{i});
    }
    const double d = distance(c.discs[i].center, c.outer.center);
    if (d + c.discs[i].radius > c.outer.radius + tol.tau) {
      closures_in_outer = false;
    }
  }

  if (rep.violations.empty()) {
    rep.verdict = Verdict::Classical;
  } else if (open_discs_disjoint && closures_in_outer) {
    rep.verdict = Verdict::SemiclassicalOnly;
  } else {
    rep.verdict = Verdict::Neither;
  }
  return rep;
}

bool contains_point(const SwissCheese& c, Point p) {
  if (!point_in_closed_disc(p, c.outer)) {
    return false;
  }
  for (const OpenDisc& d : c.discs) {
    if (point_in_open_disc(p, d)) {
      return false;
    }
  }
  return true;
}

CarpetReport whyburn_report(const SwissCheese& c, Tolerance tol) {
  require_valid(c, "whyburn_report");
  CarpetReport rep;
  rep.pairwise_disjoint_closures = true;
  rep.closures_inside_interior = true;

  const std::size_t n = c.discs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (closures_intersect(c.discs[i], c.discs[j], tol)) {
        rep.pairwise_disjoint_closures = false;
      }
    }
  }
  double area_sum = 0.0;
  for (const OpenDisc& d : c.discs) {
    if (!closure_inside_interior(d, c.outer, tol)) {
      rep.closures_inside_interior = false;
    }
    rep.max_disc_radius = std::max(rep.max_disc_radius, d.radius);
    area_sum += std::numbers::pi * d.radius * d.radius;
  }
  rep.area_deficit = std::numbers::pi * c.outer.radius * c.outer.radius - area_sum;
  return rep;
}

}  // namespace cheese
