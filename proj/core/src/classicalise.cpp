#include "cheese/classicalise.hpp"

#include <stdexcept>
#include <utility>

#include "cheese/error.hpp"

namespace cheese {

std::optional<Violation> find_violation(const SwissCheese& c, Tolerance tol) {
  const std::size_t n = c.discs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (closures_intersect(c.discs[i], c.discs[j], tol)) {
        return Violation{OverlapPair{i, j}};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!closure_inside_interior(c.discs[i], c.outer, tol)) {
      return Violation{PokesOut{i}};
    }
  }
  return std::nullopt;
}

Step step_merge(const SwissCheese& c, std::size_t i, std::size_t j, Tolerance tol) {
  const std::size_t n = c.discs.size();
  if (i >= n || j >= n || i == j) {
    throw InvalidInputError("step_merge: disc indices out of range");
  }
  if (i > j) {
    std::swap(i, j);
  }
  if (!closures_intersect(c.discs[i], c.discs[j], tol)) {
    throw PreconditionError("step_merge: disc closures do not intersect");
  }

  const OpenDisc merged = merge_discs(c.discs[i], c.discs[j]);

  // Merged disc takes position i (= min), disc j is dropped; everything
  // below j keeps its index, everything above shifts down by one.
  SwissCheese after{c.outer, {}};
  after.discs.reserve(n - 1);
  AllocationMap map{c, {}, {}};
  map.disc_targets.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == j) {
      continue;
    }
    after.discs.push_back(k == i ? merged : c.discs[k]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i || k == j) {
      map.disc_targets.push_back(Region::disc(i));
    } else {
      map.disc_targets.push_back(Region::disc(k < j ? k : k - 1));
    }
  }
  map.target = after;

  return Step{Violation{OverlapPair{i, j}}, c, std::move(after), std::move(map)};
}

Step step_shrink(const SwissCheese& c, std::size_t i, Tolerance tol) {
  const std::size_t n = c.discs.size();
  if (i >= n) {
    throw InvalidInputError("step_shrink: disc index out of range");
  }
  if (closure_inside_interior(c.discs[i], c.outer, tol)) {
    throw PreconditionError("step_shrink: disc does not protrude from the outer disc");
  }
  if (!(delta(c) > 0.0)) {
    throw PreconditionError("step_shrink: requires a positive radius margin");
  }
  // delta > 0 makes every removed disc strictly smaller than the outer disc,
  // which is exactly what keeps shrink_outer well defined here.
  if (!(c.discs[i].radius < c.outer.radius)) {
    throw std::logic_error("step_shrink: removed disc at least as large as the outer disc");
  }

  const ClosedDisc shrunk = shrink_outer(c.outer, c.discs[i]);

  SwissCheese after{shrunk, {}};
  after.discs.reserve(n - 1);
  AllocationMap map{c, {}, {}};
  map.disc_targets.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i) {
      map.disc_targets.push_back(Region::complement());
      continue;
    }
    after.discs.push_back(c.discs[k]);
    map.disc_targets.push_back(Region::disc(k < i ? k : k - 1));
  }
  map.target = after;

  return Step{Violation{PokesOut{i}}, c, std::move(after), std::move(map)};
}

ClassicalisationResult classicalise(const SwissCheese& c, Tolerance tol) {
  if (!(c == normalize(c))) {
    throw InvalidInputError("classicalise: cheese must be normalized (no radius-0 discs)");
  }
  if (!(delta(c) > 0.0)) {
    throw HypothesisError("classicalise: requires a positive radius margin, "
                          "r(outer) - sum of disc radii > 0");
  }

  ClassicalisationResult out{c, Trace{{}, identity_map(c)}};
  const std::size_t budget = c.discs.size();
  while (auto v = find_violation(out.cheese, tol)) {
    if (out.trace.steps.size() >= budget) {
      throw std::logic_error("classicalise: step budget exceeded");  // unreachable
    }
    Step st = std::holds_alternative<OverlapPair>(*v)
                  ? step_merge(out.cheese, std::get<OverlapPair>(*v).i,
                               std::get<OverlapPair>(*v).j, tol)
                  : step_shrink(out.cheese, std::get<PokesOut>(*v).i, tol);
    out.trace.overall = compose(out.trace.overall, st.map);
    out.cheese = st.after;
    out.trace.steps.push_back(std::move(st));
  }
  return out;
}

TraceCheck check_trace(const SwissCheese& source, const TraceRecord& rec, Tolerance tol) {
  TraceCheck out;
  out.steps_consistent = true;

  SwissCheese cur = source;
  AllocationMap recomposed = identity_map(source);
  try {
    for (const StepRecord& sr : rec.steps) {
      Step st = sr.is_merge
                    ? step_merge(cur, sr.indices.at(0), sr.indices.at(1), tol)
                    : step_shrink(cur, sr.indices.at(0), tol);
      if (!(st.after == sr.after)) {
        out.steps_consistent = false;
        break;
      }
      recomposed = compose(recomposed, st.map);
      cur = st.after;
    }
  } catch (const std::exception&) {
    out.steps_consistent = false;  // replay impossible: tampered indices or kinds
  }

  AllocationMap stored{source, cur, rec.overall_disc_targets};
  try {
    validate(stored);
    out.structurally_valid = true;
    out.axioms = check_axioms(stored, tol);
  } catch (const InvalidInputError&) {
    out.structurally_valid = false;
  }

  out.overall_consistent = out.steps_consistent && out.structurally_valid &&
                           stored.disc_targets == recomposed.disc_targets;
  out.pass = out.steps_consistent && out.overall_consistent && out.structurally_valid &&
             out.axioms.pass;
  return out;
}

}  // namespace cheese
