#include "cheese/allocation.hpp"

#include <doctest.h>

#include <vector>

#include "cheese/classicalise.hpp"
#include "cheese/error.hpp"
#include "cheese/generate.hpp"
#include "support.hpp"

using namespace cheese;
using testsupport::cdisc;
using testsupport::disc;
using testsupport::make_cheese;

namespace {

// every way of assigning n source discs to (target discs + complement)
std::vector<std::vector<Region>> all_assignments(std::size_t n_source, std::size_t n_target) {
  std::vector<std::vector<Region>> out{{}};
  for (std::size_t i = 0; i < n_source; ++i) {
    std::vector<std::vector<Region>> next;
    for (const auto& partial : out) {
      for (std::size_t t = 0; t <= n_target; ++t) {
        auto a = partial;
        a.push_back(t == n_target ? Region::complement() : Region::disc(t));
        next.push_back(std::move(a));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("identity map passes the axioms with zero A2 slack") {
  const SwissCheese c = make_cheese(cdisc(0, 0, 4), {disc(-1, 0, 1), disc(0.5, 0, 1)});
  const AllocationMap id = identity_map(c);
  CHECK(id.source == c);
  CHECK(id.target == c);
  for (std::size_t i = 0; i < c.discs.size(); ++i) {
    CHECK(id.disc_targets[i] == Region::disc(i));
  }
  const AxiomReport rep = check_axioms(id);
  CHECK(rep.pass);
  CHECK(rep.a2_slack == 0.0);  // empty g-set, identical outer radii
  for (double s : rep.a3_slack) {
    CHECK(s == 0.0);
  }
}

TEST_CASE("compose respects identity laws and associativity") {
  const SwissCheese c = make_cheese(cdisc(0, 0, 4), {disc(-1, 0, 1), disc(0.5, 0, 1)});
  const Step st = step_merge(c, 0, 1);
  const AllocationMap f = st.map;

  CHECK(compose(identity_map(c), f) == f);
  CHECK(compose(f, identity_map(f.target)) == f);

  // chain two more steps to get g and h with composable endpoints
  const SwissCheese c2 = make_cheese(cdisc(0, 0, 4), {disc(-1, 0, 1), disc(0.5, 0, 1),
                                                      disc(0, 2, 0.5), disc(0.2, 2, 0.5)});
  const Step s1 = step_merge(c2, 0, 1);
  const Step s2 = step_merge(s1.after, 1, 2);
  const Step s3 = step_merge(s2.after, 0, 1);
  const AllocationMap lhs = compose(compose(s1.map, s2.map), s3.map);
  const AllocationMap rhs = compose(s1.map, compose(s2.map, s3.map));
  CHECK(lhs == rhs);
}

TEST_CASE("compose rejects mismatched middle cheeses") {
  const SwissCheese a = make_cheese(cdisc(0, 0, 2), {disc(0, 0, 0.5)});
  const SwissCheese b = make_cheese(cdisc(0, 0, 2), {disc(0.1, 0, 0.5)});
  CHECK_THROWS_AS(compose(identity_map(a), identity_map(b)), CompositionError);
}

TEST_CASE("check_axioms flags A1 violations") {
  // a big disc allegedly inside a small one
  AllocationMap f;
  f.source = make_cheese(cdisc(0, 0, 4), {disc(0, 0, 2)});
  f.target = make_cheese(cdisc(0, 0, 4), {disc(0, 0, 1)});
  f.disc_targets = {Region::disc(0)};
  const AxiomReport rep = check_axioms(f);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.a1_violations.size() == 1);
  CHECK(rep.a1_violations[0] == Region::disc(0));
}

TEST_CASE("check_axioms flags a target outer disc poking out of the source outer") {
  AllocationMap f;
  f.source = make_cheese(cdisc(0, 0, 1), {});
  f.target = make_cheese(cdisc(1, 0, 1), {});  // H not inside Delta
  const AxiomReport rep = check_axioms(f);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.a1_violations.size() == 1);
  CHECK(rep.a1_violations[0] == Region::complement());
}

TEST_CASE("g_set picks out complement-bound discs") {
  const SwissCheese c = make_cheese(cdisc(0, 0, 2), {disc(2, 0, 0.5), disc(0, 0, 0.25)});
  CHECK(g_set(identity_map(c)).empty());

  const Step shrink = step_shrink(c, 0);
  CHECK(g_set(shrink.map) == std::vector<std::size_t>{0});

  const SwissCheese c2 = make_cheese(cdisc(0, 0, 4), {disc(-1, 0, 1), disc(0.5, 0, 1)});
  const Step merge = step_merge(c2, 0, 1);
  CHECK(g_set(merge.map).empty());
}

TEST_CASE("step maps pass the axioms and compose to axiom-passing maps") {
  SplitMix64 seeds(31);
  for (int trial = 0; trial < 60; ++trial) {
    RandomParams p;
    p.count = 2 + static_cast<std::size_t>(seeds.next_double() * 15);
    p.seed = seeds.next_u64();
    p.radius_budget = 0.3 + 0.5 * seeds.next_double();
    p.overlap_bias = 0.5 + 0.4 * seeds.next_double();
    const auto result = classicalise(random_cheese(p));
    AllocationMap acc = identity_map(result.trace.overall.source);
    for (const Step& st : result.trace.steps) {
      CHECK(check_axioms(st.map).pass);
      acc = compose(acc, st.map);
      CHECK(check_axioms(acc).pass);  // axiom preservation under composition
    }
  }
}

TEST_CASE("axiom-passing maps certify the subset and margin consequences") {
  const SwissCheese src =
      make_cheese(cdisc(0, 0, 4), {disc(-1, 0, 1), disc(0.5, 0, 1), disc(3.8, 0, 0.5)});
  const auto result = classicalise(src);
  const AllocationMap& overall = result.trace.overall;
  REQUIRE(check_axioms(overall).pass);

  const Tolerance tol;
  CHECK(delta(overall.target) >=
        delta(overall.source) - tol.tau * (1.0 + static_cast<double>(src.discs.size())));

  SplitMix64 rng(17);
  for (int k = 0; k < 100000; ++k) {
    const Point p = testsupport::sample_square(rng, 0, 0, 4.5);
    if (contains_point(overall.target, p)) {
      CHECK(contains_point(overall.source, p));
    }
  }
}

TEST_CASE("identity is the unique axiom-passing self-map on small cheeses") {
  const std::vector<SwissCheese> family = {
      make_cheese(cdisc(0, 0, 4), {disc(0, 0, 1)}),
      make_cheese(cdisc(0, 0, 4), {disc(-1, 0, 1), disc(1.5, 0, 0.5)}),      // disjoint
      make_cheese(cdisc(0, 0, 4), {disc(-1, 0, 1), disc(-0.5, 0, 1)}),       // overlapping
      make_cheese(cdisc(0, 0, 4), {disc(0, 0, 2), disc(0.5, 0, 0.5)}),       // nested
      make_cheese(cdisc(0, 0, 4), {disc(0, 0, 1), disc(2, 0, 0.5), disc(0, 2, 0.25)}),
      make_cheese(cdisc(0, 0, 4), {disc(0, 0, 1), disc(0.5, 0, 1), disc(3.9, 0, 0.5)}),
  };
  for (const SwissCheese& c : family) {
    const AllocationMap id = identity_map(c);
    int passing = 0;
    for (const auto& assignment : all_assignments(c.discs.size(), c.discs.size())) {
      AllocationMap f{c, c, assignment};
      if (check_axioms(f).pass) {
        ++passing;
        CHECK(f == id);
      }
    }
    CHECK(passing == 1);
  }
}

TEST_CASE("structurally invalid maps are rejected") {
  const SwissCheese c = make_cheese(cdisc(0, 0, 2), {disc(0, 0, 0.5)});
  AllocationMap f{c, c, {}};
  CHECK_THROWS_AS(check_axioms(f), InvalidInputError);  // missing disc target
  f.disc_targets = {Region::disc(7)};
  CHECK_THROWS_AS(check_axioms(f), InvalidInputError);  // index out of range
}
