#include "cheese/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "cheese/error.hpp"

namespace cheese {

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void require_finite(const OpenDisc& d, const char* op) {
  if (!finite(d.center) || !std::isfinite(d.radius) || d.radius < 0.0) {
    throw InvalidInputError(std::string(op) + ": open disc must have finite center and radius >= 0");
  }
}

void require_finite(const ClosedDisc& d, const char* op) {
  if (!finite(d.center) || !std::isfinite(d.radius) || d.radius <= 0.0) {
    throw InvalidInputError(std::string(op) + ": closed disc must have finite center and radius > 0");
  }
}

void require_finite(Point p, const char* op) {
  if (!finite(p)) {
    throw InvalidInputError(std::string(op) + ": point must be finite");
  }
}

std::tuple<double, double, double> key(const OpenDisc& d) {
  return {d.center.x, d.center.y, d.radius};
}

}  // namespace

double distance(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

bool closures_intersect(const OpenDisc& a, const OpenDisc& b, Tolerance tol) {
  require_finite(a, "closures_intersect");
  require_finite(b, "closures_intersect");
  if (a.radius <= 0.0 || b.radius <= 0.0) {
    return false;  // radius 0 denotes the empty set
  }
  return distance(a.center, b.center) < a.radius + b.radius + tol.tau;
}

bool closure_inside_interior(const OpenDisc& inner, const ClosedDisc& outer, Tolerance tol) {
  require_finite(inner, "closure_inside_interior");
  require_finite(outer, "closure_inside_interior");
  return distance(inner.center, outer.center) + inner.radius < outer.radius - tol.tau;
}

OpenDisc merge_discs(const OpenDisc& e, const OpenDisc& e2) {
  require_finite(e, "merge_discs");
  require_finite(e2, "merge_discs");
  if (!closures_intersect(e, e2)) {
    throw PreconditionError("merge_discs: disc closures do not intersect");
  }

  // Canonical argument order; the rest of the formula then evaluates
  // identically for (a, b) and (b, a).
  const OpenDisc* a = &e;
  const OpenDisc* b = &e2;
  if (key(*b) < key(*a)) {
    std::swap(a, b);
  }

  const double d = distance(a->center, b->center);
  const double rmin = std::min(a->radius, b->radius);
  const double rmax = std::max(a->radius, b->radius);
  if (d + rmin <= rmax) {
    return a->radius >= b->radius ? *a : *b;  // one disc already contains the other
  }

  // d > 0 here: concentric discs always land in the containment branch.
  const double r = (d + a->radius + b->radius) / 2.0;
  const double t = r - a->radius;
  const double ux = (b->center.x - a->center.x) / d;
  const double uy = (b->center.y - a->center.y) / d;
  return OpenDisc{{a->center.x + t * ux, a->center.y + t * uy}, r};
}

ClosedDisc shrink_outer(const ClosedDisc& h, const OpenDisc& e) {
  require_finite(h, "shrink_outer");
  require_finite(e, "shrink_outer");
  if (e.radius <= 0.0) {
    return h;  // removing the empty set
  }

  const double d = distance(h.center, e.center);
  if (d + h.radius <= e.radius) {
    throw PreconditionError("shrink_outer: removed disc swallows the interior of the outer disc");
  }
  if (d >= e.radius + h.radius) {
    return h;  // closures already disjoint
  }

  // Tangent to e from outside and to h from inside.
  const double r = (d + h.radius - e.radius) / 2.0;
  double ux = 1.0;  // concentric tie-break: displace along +x
  double uy = 0.0;
  if (d > 0.0) {
    ux = (h.center.x - e.center.x) / d;
    uy = (h.center.y - e.center.y) / d;
  }
  const double t = h.radius - r;
  return ClosedDisc{{h.center.x + t * ux, h.center.y + t * uy}, r};
}

bool point_in_open_disc(Point p, const OpenDisc& d) {
  require_finite(p, "point_in_open_disc");
  require_finite(d, "point_in_open_disc");
  const double dx = p.x - d.center.x;
  const double dy = p.y - d.center.y;
  return dx * dx + dy * dy < d.radius * d.radius;
}

bool point_in_closed_disc(Point p, const ClosedDisc& d) {
  require_finite(p, "point_in_closed_disc");
  require_finite(d, "point_in_closed_disc");
  const double dx = p.x - d.center.x;
  const double dy = p.y - d.center.y;
  return dx * dx + dy * dy <= d.radius * d.radius;
}

}  // namespace cheese
