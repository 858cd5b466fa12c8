#pragma once

#include <compare>

namespace cheese {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// An open disc in the plane. radius == 0 denotes the empty set.
struct OpenDisc {
  Point center;
  double radius = 0.0;

  friend bool operator==(const OpenDisc&, const OpenDisc&) = default;
};

/// A closed disc with strictly positive radius.
struct ClosedDisc {
  Point center;
  double radius = 1.0;

  friend bool operator==(const ClosedDisc&, const ClosedDisc&) = default;
};

/// Comparison slack for the classification predicates. All predicates state
/// their exact comparison including tau; membership tests never use it.
struct Tolerance {
  double tau = 1e-9;
};

/// Euclidean distance, computed as sqrt(dx*dx + dy*dy). Inputs are desk
/// scale, so overflow is not a concern and the result is bit-reproducible.
double distance(Point a, Point b);

/// True iff the closures of a and b meet: dist < r(a) + r(b) + tau, with
/// radius-0 discs treated as empty (never intersecting). Symmetric.
bool closures_intersect(const OpenDisc& a, const OpenDisc& b, Tolerance tol = {});

/// True iff closure(inner) lies in the interior of outer:
/// dist + r(inner) < r(outer) - tau.
bool closure_inside_interior(const OpenDisc& inner, const ClosedDisc& outer, Tolerance tol = {});

/// Smallest open disc containing the union of two discs with intersecting
/// closures. The result radius never exceeds r(e) + r(e2) + tau and the
/// arguments are ordered canonically first, so merge_discs(a, b) and
/// merge_discs(b, a) are bit-identical.
OpenDisc merge_discs(const OpenDisc& e, const OpenDisc& e2);

/// Largest closed disc contained in h and disjoint from closure(e). Returns
/// h unchanged when the closures are already disjoint (or e is empty). The
/// result radius is at least r(h) - r(e). Requires that e does not swallow
/// the interior of h; the concentric tie is broken by displacing along +x.
ClosedDisc shrink_outer(const ClosedDisc& h, const OpenDisc& e);

/// Strict membership test, exact comparison dx*dx + dy*dy < r*r.
bool point_in_open_disc(Point p, const OpenDisc& d);

/// Non-strict membership test, exact comparison dx*dx + dy*dy <= r*r.
bool point_in_closed_disc(Point p, const ClosedDisc& d);

}  // namespace cheese
