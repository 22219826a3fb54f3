#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "neutro/bifuzzy.hpp"
#include "neutro/tetra.hpp"

using namespace neutro;

namespace {
bool near(double a, double b, double tol = kExactTol) { return std::fabs(a - b) <= tol; }
}  // namespace

TEST_CASE("worked interior decomposition") {
  const TetraVector v = decompose4(make_triple(0.6, 0.5, 0.4));
  CHECK(near(v.truth, 0.28333333333333333));
  CHECK(near(v.neutrality, 0.18333333333333332));
  CHECK(near(v.ignorance, 0.4));
  CHECK(near(v.falsity, 0.13333333333333333));
  CHECK(near(indeterminacy4(v), 0.58333333333333337));
  CHECK(is_partition(v));
}

TEST_CASE("prototypes decompose to exact unit vectors") {
  const TetraVector t = decompose4(make_triple(1, 0, 0));
  const TetraVector n = decompose4(make_triple(0, 1, 0));
  const TetraVector f = decompose4(make_triple(0, 0, 1));
  const TetraVector w = decompose4(make_triple(0, 0, 0));
  CHECK(t.truth == 1.0);
  CHECK(n.neutrality == 1.0);
  CHECK(f.falsity == 1.0);
  CHECK(w.ignorance == 1.0);
  for (const TetraVector& v : {t, n, f, w}) CHECK(testutil::exact_unit_vector(v));

  // The saturated point is not a tetra prototype; it spreads evenly.
  const TetraVector s = decompose4(make_triple(1, 1, 1));
  CHECK(near(s.truth, 1.0 / 3.0));
  CHECK(near(s.neutrality, 1.0 / 3.0));
  CHECK(s.ignorance == 0.0);
  CHECK(near(s.falsity, 1.0 / 3.0));
}

TEST_CASE("decomposition is a partition with the max identity") {
  testutil::Rng rng(47);
  for (int k = 0; k < 20000; ++k) {
    const NeutrosophicTriple q = testutil::random_triple(rng);
    const TetraVector v = decompose4(q);
    CHECK(is_partition(v));
    for (double c : v.components()) CHECK(c >= 0.0);
    const double hi = std::max({q.t.value(), q.i.value(), q.f.value()});
    CHECK(near(v.truth + v.neutrality + v.falsity, hi));
    CHECK(v.ignorance == 1.0 - hi);
  }
}

TEST_CASE("restriction to I = 0 reproduces the bifuzzy reading") {
  testutil::Rng rng(53);
  for (int k = 0; k < 20000; ++k) {
    const double mu = testutil::uniform01(rng);
    const double nu = testutil::uniform01(rng);
    const TetraVector v = decompose4(make_triple(mu, 0.0, nu));
    const Bifuzzy3Vector b = bifuzzy3(make_pair(mu, nu));
    CHECK(v.truth == b.truth);
    CHECK(v.falsity == b.falsity);
    CHECK(v.ignorance == b.ignorance);
    CHECK(v.neutrality == 0.0);
  }
}

TEST_CASE("negation is an exact involution that mirrors the source swap") {
  testutil::Rng rng(59);
  for (int k = 0; k < 20000; ++k) {
    const NeutrosophicTriple q = testutil::random_triple(rng);
    const TetraVector v = decompose4(q);
    const TetraVector nn = negate4(negate4(v));
    CHECK(testutil::max_component_diff(nn, v) == 0.0);
    CHECK(testutil::max_component_diff(decompose4(swap_tf(q)), negate4(v)) == 0.0);
  }
}

TEST_CASE("worked union and intersection on crisp points") {
  const TNormFamily product = TNormFamily::product();
  const TetraVector t = decompose4(make_triple(1, 0, 0));
  const TetraVector f = decompose4(make_triple(0, 0, 1));
  const TetraVector w = decompose4(make_triple(0, 0, 0));

  const TetraVector u = union4(t, f, product);
  CHECK(u.truth == 1.0);
  CHECK(testutil::exact_unit_vector(u));

  const TetraVector i = intersect4(w, t, product);
  CHECK(i.ignorance == 1.0);
  CHECK(testutil::exact_unit_vector(i));
}

TEST_CASE("union and intersection preserve partitions for every family") {
  testutil::Rng rng(61);
  const auto families = testutil::acceptance_families();
  for (int k = 0; k < 4000; ++k) {
    const TetraVector a = decompose4(testutil::random_triple(rng));
    const TetraVector b = decompose4(testutil::random_triple(rng));
    for (const TNormFamily& fam : families) {
      CHECK(is_partition(union4(a, b, fam)));
      CHECK(is_partition(intersect4(a, b, fam)));
    }
  }
}

TEST_CASE("De Morgan laws, idempotence, commutativity, associativity") {
  testutil::Rng rng(67);
  const auto families = testutil::acceptance_families();
  const TNormFamily godel = TNormFamily::godel();
  for (int k = 0; k < 2000; ++k) {
    const TetraVector a = decompose4(testutil::random_triple(rng));
    const TetraVector b = decompose4(testutil::random_triple(rng));
    const TetraVector c = decompose4(testutil::random_triple(rng));
    for (const TNormFamily& fam : families) {
      CHECK(testutil::max_component_diff(negate4(union4(a, b, fam)),
                                         intersect4(negate4(a), negate4(b), fam)) <= kExactTol);
      CHECK(testutil::max_component_diff(negate4(intersect4(a, b, fam)),
                                         union4(negate4(a), negate4(b), fam)) <= kExactTol);
      CHECK(testutil::max_component_diff(union4(a, b, fam), union4(b, a, fam)) <= kExactTol);
      CHECK(testutil::max_component_diff(intersect4(a, b, fam), intersect4(b, a, fam)) <=
            kExactTol);
      CHECK(testutil::max_component_diff(union4(union4(a, b, fam), c, fam),
                                         union4(a, union4(b, c, fam), fam)) <= kPartitionTol);
      CHECK(testutil::max_component_diff(intersect4(intersect4(a, b, fam), c, fam),
                                         intersect4(a, intersect4(b, c, fam), fam)) <=
            kPartitionTol);
    }
    CHECK(testutil::max_component_diff(union4(a, a, godel), a) <= kExactTol);
    CHECK(testutil::max_component_diff(intersect4(a, a, godel), a) <= kExactTol);
  }
}

TEST_CASE("prototype truth table is family independent") {
  const TetraVector protos[] = {
      decompose4(make_triple(1, 0, 0)), decompose4(make_triple(0, 1, 0)),
      decompose4(make_triple(0, 0, 0)), decompose4(make_triple(0, 0, 1))};
  const TNormFamily reference = TNormFamily::product();
  const auto families = testutil::acceptance_families();
  for (const TetraVector& a : protos) {
    for (const TetraVector& b : protos) {
      const TetraVector u = union4(a, b, reference);
      const TetraVector i = intersect4(a, b, reference);
      CHECK(testutil::exact_unit_vector(u));
      CHECK(testutil::exact_unit_vector(i));
      for (const TNormFamily& fam : families) {
        CHECK(testutil::max_component_diff(union4(a, b, fam), u) == 0.0);
        CHECK(testutil::max_component_diff(intersect4(a, b, fam), i) == 0.0);
      }
    }
  }
}
