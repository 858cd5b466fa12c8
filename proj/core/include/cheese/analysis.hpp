#pragma once

#include <complex>
#include <vector>

#include "cheese/cheese.hpp"
#include "cheese/geometry.hpp"

namespace cheese {

/// A circle traversed once, counterclockwise for orientation +1.
struct OrientedCircle {
  Point center;
  double radius = 1.0;
  int orientation = +1;

  friend bool operator==(const OrientedCircle&, const OrientedCircle&) = default;
};

/// A formal sum of oriented circles; integration over a chain sums the
/// per-circle integrals in order.
struct Chain {
  std::vector<OrientedCircle> circles;
};

/// One term coefficient / (z - pole)^order.
struct PoleTerm {
  std::complex<double> pole;
  int order = 1;
  std::complex<double> coefficient{1.0, 0.0};
};

/// Polynomial-plus-pole-terms form. Keeping the poles explicit makes
/// admissibility a direct location test, with no root finding.
struct RationalFunction {
  std::vector<std::complex<double>> poly;  // c0 + c1 z + c2 z^2 + ...
  std::vector<PoleTerm> poles;
};

std::complex<double> evaluate(const RationalFunction& f, std::complex<double> z);

/// The positively oriented outer circle followed by one negatively oriented
/// circle per removed disc, in disc order.
Chain boundary_chain(const SwissCheese& c);

/// Trapezoidal rule with `nodes` equispaced parameter points per circle;
/// spectrally accurate for integrands analytic near the contour. Refuses
/// (QuadratureError) if any pole lies within tau of any circle of the chain.
/// Requires nodes >= 16.
std::complex<double> integrate(const Chain& ch, const RationalFunction& f, int nodes,
                               Tolerance tol = {});

/// Index of p with respect to the chain, computed by quadrature of
/// 1/(2 pi i) * integral of dz/(z - p) and rounded. Throws QuadratureError
/// if the rounding residual reaches 0.01 (insufficient nodes) or p is within
/// tau of a circle.
int winding_number(const Chain& ch, Point p, int nodes = 256, Tolerance tol = {});

/// Arc-length mass of the chain: sum of 2 pi r over its circles, orientation
/// ignored. For a boundary chain with disjoint circles the per-circle bound
/// 2 pi r(D) is attained with equality.
double total_variation(const Chain& ch);

struct AnnihilationReport {
  std::complex<double> value;
  bool admissible = false;
  bool pass = false;
  double total_variation = 0.0;
  double max_modulus = 0.0;  // max |f| over the quadrature nodes
  double bound = 0.0;        // tau * max(1, total_variation) * max_modulus
};

/// Integrates f over the boundary chain of a classical cheese. f is
/// admissible when every pole lies strictly inside some removed disc or
/// strictly outside the outer disc; admissible functions must integrate to
/// (numerically) zero. An inadmissible f is reported with its nonzero value
/// as a negative control, and passes vacuously. Throws PreconditionError if
/// the cheese is not classical, QuadratureError for poles near contours.
AnnihilationReport annihilation_test(const SwissCheese& c, const RationalFunction& f, int nodes,
                                     Tolerance tol = {});

}  // namespace cheese
