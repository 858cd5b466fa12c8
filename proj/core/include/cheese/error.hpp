#pragma once

#include <stdexcept>

namespace cheese {

/// Structural problems in input data: non-finite coordinates, negative radii,
/// malformed JSON, out-of-range indices.
class InvalidInputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its stated precondition.
class PreconditionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The classicalisation hypothesis (positive radius margin) does not hold.
class HypothesisError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Contour quadrature refused: a pole sits on or too close to a contour,
/// or the node count cannot resolve the integrand.
class QuadratureError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Allocation maps whose middle cheeses differ cannot be composed.
class CompositionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cheese
