#include "cheese/allocation.hpp"

#include <numeric>

#include "cheese/error.hpp"

namespace cheese {

void validate(const AllocationMap& f) {
  if (f.disc_targets.size() != f.source.discs.size()) {
    throw InvalidInputError("allocation map: one target region per source disc required");
  }
  for (const Region& r : f.disc_targets) {
    if (!r.is_complement() && r.disc_index() >= f.target.discs.size()) {
      throw InvalidInputError("allocation map: disc target index out of range");
    }
  }
}

AllocationMap identity_map(const SwissCheese& c) {
  AllocationMap f{c, c, {}};
  f.disc_targets.reserve(c.discs.size());
  for (std::size_t i = 0; i < c.discs.size(); ++i) {
    f.disc_targets.push_back(Region::disc(i));
  }
  return f;
}

AllocationMap compose(const AllocationMap& f, const AllocationMap& g) {
  validate(f);
  validate(g);
  if (!(f.target == g.source)) {
    throw CompositionError("compose: f.target and g.source are not the same cheese");
  }
  AllocationMap h{f.source, g.target, {}};
  h.disc_targets.reserve(f.disc_targets.size());
  for (const Region& r : f.disc_targets) {
    // the complement is pinned to the complement, so it absorbs
    h.disc_targets.push_back(r.is_complement() ? Region::complement()
                                               : g.disc_targets[r.disc_index()]);
  }
  return h;
}

AxiomReport check_axioms(const AllocationMap& f, Tolerance tol) {
  validate(f);
  AxiomReport rep;
  const ClosedDisc& outer_s = f.source.outer;
  const ClosedDisc& outer_t = f.target.outer;

  // A1 for the complement: C minus Delta inside C minus H, i.e. H inside Delta.
  if (!(distance(outer_s.center, outer_t.center) + outer_t.radius <= outer_s.radius + tol.tau)) {
    rep.a1_violations.push_back(Region::complement());
  }

  double g_radius_sum = 0.0;
  rep.a3_slack.assign(f.target.discs.size(), 0.0);
  for (std::size_t i = 0; i < f.disc_targets.size(); ++i) {
    const OpenDisc& d = f.source.discs[i];
    const Region& t = f.disc_targets[i];
    if (t.is_complement()) {
      g_radius_sum += d.radius;
      if (!(distance(d.center, outer_t.center) >= d.radius + outer_t.radius - tol.tau)) {
        rep.a1_violations.push_back(Region::disc(i));
      }
    } else {
      const OpenDisc& e = f.target.discs[t.disc_index()];
      rep.a3_slack[t.disc_index()] += d.radius;
      if (!(distance(d.center, e.center) + d.radius <= e.radius + tol.tau)) {
        rep.a1_violations.push_back(Region::disc(i));
      }
    }
  }

  rep.a2_slack = g_radius_sum - (outer_s.radius - outer_t.radius);
  for (std::size_t j = 0; j < rep.a3_slack.size(); ++j) {
    rep.a3_slack[j] -= f.target.discs[j].radius;
  }

  rep.pass = rep.a1_violations.empty() && rep.a2_slack >= -tol.tau;
  for (double s : rep.a3_slack) {
    rep.pass = rep.pass && s >= -tol.tau;
  }
  return rep;
}

std::vector<std::size_t> g_set(const AllocationMap& f) {
  validate(f);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.disc_targets.size(); ++i) {
    if (f.disc_targets[i].is_complement()) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace cheese
