#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cheese/cheese.hpp"

namespace cheese {

/// A region of a cheese's extended disc family: one of the removed discs,
/// or the complement of the outer disc.
class Region {
 public:
  static Region complement() { return Region(std::nullopt); }
  static Region disc(std::size_t index) { return Region(index); }

  bool is_complement() const { return !index_.has_value(); }

  /// Only meaningful when !is_complement().
  std::size_t disc_index() const { return *index_; }

  friend bool operator==(const Region&, const Region&) = default;

 private:
  explicit Region(std::optional<std::size_t> index) : index_(index) {}
  std::optional<std::size_t> index_;
};

/// A total assignment from the source cheese's regions to the target's.
/// The complement is always assigned to the complement, so only the disc
/// assignments are stored (disc_targets[i] is where source disc i goes).
/// Surjectivity onto target discs is not a structural constraint here; a
/// non-surjective assignment simply fails axiom A3, which is how tampered
/// certificates surface as verification failures rather than crashes.
struct AllocationMap {
  SwissCheese source;
  SwissCheese target;
  std::vector<Region> disc_targets;

  friend bool operator==(const AllocationMap&, const AllocationMap&) = default;
};

/// Axiom check results. Slacks are signed: a2_slack is the g-set radius sum
/// minus (r(source outer) - r(target outer)); a3_slack[j] is the preimage
/// radius sum of target disc j minus its radius. pass holds iff
/// a1_violations is empty and every slack is >= -tau.
struct AxiomReport {
  std::vector<Region> a1_violations;
  double a2_slack = 0.0;
  std::vector<double> a3_slack;
  bool pass = false;
};

/// Throws InvalidInputError unless disc_targets has one entry per source
/// disc and every disc target index is in range for the target cheese.
void validate(const AllocationMap& f);

AllocationMap identity_map(const SwissCheese& c);

/// Pointwise composition g after f. Requires f.target == g.source by exact
/// structural equality; throws CompositionError otherwise.
AllocationMap compose(const AllocationMap& f, const AllocationMap& g);

/// Containment axiom A1 is tested in closed form:
///   disc i inside target disc j    iff dist + r_i <= r_j + tau
///   disc i inside target complement iff dist >= r_i + r(H) - tau
///   complement inside complement    iff dist + r(H) <= r(Delta) + tau
/// Violations are data, not errors.
AxiomReport check_axioms(const AllocationMap& f, Tolerance tol = {});

/// Indices of the source discs assigned to the target complement, ascending.
std::vector<std::size_t> g_set(const AllocationMap& f);

}  // namespace cheese
