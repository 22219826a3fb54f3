#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "neutro/bifuzzy.hpp"

using namespace neutro;

namespace {
bool near(double a, double b, double tol = kExactTol) { return std::fabs(a - b) <= tol; }
}  // namespace

TEST_CASE("fuzzy3 splits a membership degree around the half point") {
  const Fuzzy3Vector v = fuzzy3(UnitDegree(0.75));
  CHECK(near(v.truth, 0.5));
  CHECK(near(v.ambiguity, 0.5));
  CHECK(v.falsity == 0.0);

  const Fuzzy3Vector half = fuzzy3(UnitDegree(0.5));
  CHECK(half.truth == 0.0);
  CHECK(near(half.ambiguity, 1.0));
  CHECK(half.falsity == 0.0);
}

TEST_CASE("ifs4 reads an intuitionistic pair and rejects over-defined ones") {
  const Ifs4Vector v = ifs4(make_pair(0.5, 0.3));
  CHECK(near(v.truth, 0.2));
  CHECK(near(v.ambiguity, 0.6));
  CHECK(near(v.under_defined, 0.2));
  CHECK(v.falsity == 0.0);
  CHECK_THROWS_AS(ifs4(make_pair(0.8, 0.4)), ConstraintViolation);
}

TEST_CASE("bifuzzy vectors match their closed forms at a worked point") {
  const BifuzzyPair p64 = make_pair(0.6, 0.4);
  const Bifuzzy3Vector b3 = bifuzzy3(p64);
  CHECK(near(b3.truth, 0.39999999999999997));
  CHECK(near(b3.ignorance, 0.4));
  CHECK(near(b3.falsity, 0.2));

  const BifuzzyPair p75 = make_pair(0.7, 0.5);
  const Bifuzzy4DefVector b4d = bifuzzy4_def(p75);
  CHECK(near(b4d.truth, 0.5));
  CHECK(near(b4d.over_defined, 0.2));
  CHECK(b4d.under_defined == 0.0);
  CHECK(near(b4d.falsity, 0.3));

  const Bifuzzy4IgnVector b4i = bifuzzy4_ign(p75);
  CHECK(near(b4i.truth, 0.2));
  CHECK(near(b4i.contradiction, 0.5));
  CHECK(near(b4i.ignorance, 0.3));
  CHECK(b4i.falsity == 0.0);

  const Bifuzzy5Vector b5 = bifuzzy5(p75);
  CHECK(near(b5.truth, 0.2));
  CHECK(near(b5.over_defined, 0.2));
  CHECK(near(b5.ambiguity, 0.6));
  CHECK(b5.under_defined == 0.0);
  CHECK(b5.falsity == 0.0);
}

TEST_CASE("every reading is a partition of unity") {
  testutil::Rng rng(23);
  for (int k = 0; k < 20000; ++k) {
    const double mu = testutil::uniform01(rng);
    const double nu = testutil::uniform01(rng);
    const BifuzzyPair pair = make_pair(mu, nu);
    const BifuzzyPair ifs_pair = make_pair(mu, testutil::uniform01(rng) * (1.0 - mu));
    CHECK(check_partition(fuzzy3(pair.mu).components()));
    CHECK(check_partition(ifs4(ifs_pair).components()));
    CHECK(check_partition(bifuzzy3(pair).components()));
    CHECK(check_partition(bifuzzy4_def(pair).components()));
    CHECK(check_partition(bifuzzy4_ign(pair).components()));
    CHECK(check_partition(bifuzzy5(pair).components()));
  }
}

TEST_CASE("exclusion products vanish") {
  testutil::Rng rng(29);
  for (int k = 0; k < 20000; ++k) {
    const BifuzzyPair pair = make_pair(testutil::uniform01(rng), testutil::uniform01(rng));
    const Bifuzzy4DefVector d = bifuzzy4_def(pair);
    const Bifuzzy4IgnVector g = bifuzzy4_ign(pair);
    const Bifuzzy5Vector v = bifuzzy5(pair);
    CHECK(d.over_defined * d.under_defined <= kExactTol);
    CHECK(g.truth * g.falsity <= kExactTol);
    CHECK(v.truth * v.falsity <= kExactTol);
    CHECK(v.over_defined * v.under_defined <= kExactTol);
  }
}

TEST_CASE("swapping membership and non-membership mirrors truth and falsity") {
  testutil::Rng rng(31);
  for (int k = 0; k < 20000; ++k) {
    const double mu = testutil::uniform01(rng);
    const double nu = testutil::uniform01(rng);
    const Bifuzzy5Vector a = bifuzzy5(make_pair(mu, nu));
    const Bifuzzy5Vector b = bifuzzy5(make_pair(nu, mu));
    CHECK(a.truth == b.falsity);
    CHECK(a.falsity == b.truth);
    CHECK(a.ambiguity == b.ambiguity);
    CHECK(a.over_defined == b.over_defined);
    CHECK(a.under_defined == b.under_defined);

    const Bifuzzy3Vector x = bifuzzy3(make_pair(mu, nu));
    const Bifuzzy3Vector y = bifuzzy3(make_pair(nu, mu));
    CHECK(x.truth == y.falsity);
    CHECK(x.ignorance == y.ignorance);
  }
}

TEST_CASE("crisp pairs map to unit vectors") {
  CHECK(testutil::exact_unit_vector(bifuzzy5(make_pair(1.0, 0.0))));
  CHECK(testutil::exact_unit_vector(bifuzzy5(make_pair(0.0, 1.0))));
  CHECK(testutil::exact_unit_vector(bifuzzy5(make_pair(1.0, 1.0))));
  CHECK(testutil::exact_unit_vector(bifuzzy5(make_pair(0.0, 0.0))));
  CHECK(bifuzzy5(make_pair(1.0, 1.0)).over_defined == 1.0);
  CHECK(bifuzzy5(make_pair(0.0, 0.0)).under_defined == 1.0);
}
