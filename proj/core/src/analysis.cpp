#include "cheese/analysis.hpp"

#include <cmath>
#include <numbers>

#include "cheese/error.hpp"

namespace cheese {

namespace {

using Complex = std::complex<double>;

void require_valid(const RationalFunction& f) {
  for (const PoleTerm& t : f.poles) {
    if (t.order < 1) {
      throw InvalidInputError("rational function: pole order must be >= 1");
    }
    if (!std::isfinite(t.pole.real()) || !std::isfinite(t.pole.imag()) ||
        !std::isfinite(t.coefficient.real()) || !std::isfinite(t.coefficient.imag())) {
      throw InvalidInputError("rational function: non-finite pole term");
    }
  }
  for (const Complex& coeff : f.poly) {
    if (!std::isfinite(coeff.real()) || !std::isfinite(coeff.imag())) {
      throw InvalidInputError("rational function: non-finite polynomial coefficient");
    }
  }
}

void require_poles_off_contours(const Chain& ch, const RationalFunction& f, Tolerance tol) {
  for (const OrientedCircle& circle : ch.circles) {
    for (const PoleTerm& t : f.poles) {
      const double d = distance({t.pole.real(), t.pole.imag()}, circle.center);
      if (std::abs(d - circle.radius) < tol.tau) {
        throw QuadratureError("integrate: pole within tolerance of a contour circle");
      }
    }
  }
}

// N-point trapezoidal rule on the positively oriented circle. The integrand
// is 2 pi periodic and analytic near the contour, so the error decays
// geometrically in N.
Complex circle_integral(const OrientedCircle& circle, const RationalFunction& f, int nodes) {
  const Complex center{circle.center.x, circle.center.y};
  Complex sum{0.0, 0.0};
  for (int k = 0; k < nodes; ++k) {
    const double t = (2.0 * std::numbers::pi * k) / nodes;
    const Complex e{std::cos(t), std::sin(t)};
    const Complex z = center + circle.radius * e;
    const Complex dz = Complex{0.0, 1.0} * circle.radius * e;
    sum += evaluate(f, z) * dz;
  }
  sum *= 2.0 * std::numbers::pi / nodes;
  return circle.orientation >= 0 ? sum : -sum;
}

double max_modulus_on_chain(const Chain& ch, const RationalFunction& f, int nodes) {
  double best = 0.0;
  for (const OrientedCircle& circle : ch.circles) {
    const Complex center{circle.center.x, circle.center.y};
    for (int k = 0; k < nodes; ++k) {
      const double t = (2.0 * std::numbers::pi * k) / nodes;
      const Complex z = center + circle.radius * Complex{std::cos(t), std::sin(t)};
      best = std::max(best, std::abs(evaluate(f, z)));
    }
  }
  return best;
}

}  // namespace

std::complex<double> evaluate(const RationalFunction& f, std::complex<double> z) {
  Complex acc{0.0, 0.0};
  for (auto it = f.poly.rbegin(); it != f.poly.rend(); ++it) {
    acc = acc * z + *it;
  }
  for (const PoleTerm& t : f.poles) {
    const Complex w = z - t.pole;
    Complex p = w;
    for (int k = 1; k < t.order; ++k) {
      p *= w;
    }
    acc += t.coefficient / p;
  }
  return acc;
}

Chain boundary_chain(const SwissCheese& c) {
  Chain ch;
  ch.circles.reserve(c.discs.size() + 1);
  ch.circles.push_back(OrientedCircle{c.outer.center, c.outer.radius, +1});
  for (const OpenDisc& d : c.discs) {
    ch.circles.push_back(OrientedCircle{d.center, d.radius, -1});
  }
  return ch;
}

std::complex<double> integrate(const Chain& ch, const RationalFunction& f, int nodes,
                               Tolerance tol) {
  if (nodes < 16) {
    throw InvalidInputError("integrate: nodes must be >= 16");
  }
  require_valid(f);
  require_poles_off_contours(ch, f, tol);

  Complex total{0.0, 0.0};
  for (const OrientedCircle& circle : ch.circles) {
    total += circle_integral(circle, f, nodes);
  }
  return total;
}

int winding_number(const Chain& ch, Point p, int nodes, Tolerance tol) {
  RationalFunction f;
  f.poles.push_back(PoleTerm{Complex{p.x, p.y}, 1, Complex{1.0, 0.0}});
  const Complex v = integrate(ch, f, nodes, tol) / (2.0 * std::numbers::pi * Complex{0.0, 1.0});
  const long k = std::lround(v.real());
  if (std::abs(v - Complex{static_cast<double>(k), 0.0}) >= 0.01) {
    throw QuadratureError("winding_number: non-integral result, increase nodes");
  }
  return static_cast<int>(k);
}

double total_variation(const Chain& ch) {
  double sum = 0.0;
  for (const OrientedCircle& circle : ch.circles) {
    sum += 2.0 * std::numbers::pi * circle.radius;
  }
  return sum;
}

AnnihilationReport annihilation_test(const SwissCheese& c, const RationalFunction& f, int nodes,
                                     Tolerance tol) {
  if (classify(c, tol).verdict != Verdict::Classical) {
    throw PreconditionError("annihilation_test: cheese must be classical");
  }
  require_valid(f);

  const Chain ch = boundary_chain(c);

  AnnihilationReport rep;
  rep.admissible = true;
  for (const PoleTerm& t : f.poles) {
    const Point p{t.pole.real(), t.pole.imag()};
    bool inside_some_disc = false;
    for (const OpenDisc& d : c.discs) {
      if (point_in_open_disc(p, d)) {
        inside_some_disc = true;
        break;
      }
    }
    const bool outside_outer = !point_in_closed_disc(p, c.outer);
    if (!inside_some_disc && !outside_outer) {
      rep.admissible = false;  // pole in the cheese set: negative control
    }
  }

  rep.value = integrate(ch, f, nodes, tol);
  rep.total_variation = total_variation(ch);
  rep.max_modulus = max_modulus_on_chain(ch, f, nodes);
  rep.bound = tol.tau * std::max(1.0, rep.total_variation) * rep.max_modulus;
  rep.pass = !rep.admissible || std::abs(rep.value) <= rep.bound;
  return rep;
}

}  // namespace cheese
