#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "neutro/measures.hpp"

using namespace neutro;

namespace {
bool near(double a, double b, double tol = kExactTol) { return std::fabs(a - b) <= tol; }
const NeutrosophicTriple kInterior = make_triple(0.6, 0.5, 0.4);
}  // namespace

TEST_CASE("net truth and mean at the worked interior point") {
  CHECK(near(net_truth(kInterior), 0.1333333333333333));
  CHECK(mean_component(kInterior) == 0.5);
  CHECK(net_truth(make_triple(1, 0, 0)) == 1.0);
  CHECK(net_truth(make_triple(0, 0, 1)) == -1.0);
  CHECK(net_truth(make_triple(0.5, 1, 0.5)) == 0.0);
}

TEST_CASE("definedness profiles agree at their anchor points") {
  for (DefinednessProfile prof :
       {DefinednessProfile::Rational, DefinednessProfile::Sine, DefinednessProfile::Quadratic,
        DefinednessProfile::PiecewiseLinear, DefinednessProfile::SquareRoot}) {
    CHECK(near(definedness(0.0, prof), -1.0));
    CHECK(near(definedness(1.0 / 3.0, prof), 0.0));
    CHECK(near(definedness(1.0, prof), 1.0));
  }
}

TEST_CASE("definedness profiles at lambda = 1/2") {
  CHECK(near(definedness(0.5, DefinednessProfile::Rational), 0.33333333333333331));
  CHECK(near(definedness(0.5, DefinednessProfile::Sine), 0.41421356237309492));
  CHECK(near(definedness(0.5, DefinednessProfile::Quadratic), 0.375));
  CHECK(near(definedness(0.5, DefinednessProfile::PiecewiseLinear), 0.25));
  CHECK(near(definedness(0.5, DefinednessProfile::SquareRoot), 0.17157287525380988));
}

TEST_CASE("definedness profiles at lambda = 1/5") {
  CHECK(near(definedness(0.2, DefinednessProfile::Rational), -0.33333333333333326));
  CHECK(near(definedness(0.2, DefinednessProfile::Sine), -0.38196601125010521));
  CHECK(near(definedness(0.2, DefinednessProfile::Quadratic), -0.35999999999999999));
  CHECK(near(definedness(0.2, DefinednessProfile::PiecewiseLinear), -0.39999999999999997));
  CHECK(near(definedness(0.2, DefinednessProfile::SquareRoot), -0.17157287525380988));
}

TEST_CASE("profile parsing round-trips and rejects junk") {
  for (DefinednessProfile prof :
       {DefinednessProfile::Rational, DefinednessProfile::Sine, DefinednessProfile::Quadratic,
        DefinednessProfile::PiecewiseLinear, DefinednessProfile::SquareRoot}) {
    CHECK(parse_profile(profile_name(prof)) == prof);
  }
  CHECK_THROWS_AS(parse_profile("cubic"), InvalidParameter);
  CHECK_THROWS_AS(parse_profile(""), InvalidParameter);
}

TEST_CASE("score at worked points") {
  CHECK(near(score(kInterior), 0.099999999999999978));
  CHECK(score(make_triple(1, 0, 0)) == 1.0);
  CHECK(score(make_triple(0, 0, 1)) == -1.0);
  CHECK(score(make_triple(0.5, 0.2, 0.5)) == 0.0);
}

TEST_CASE("score order relation uses the tie tolerance") {
  CHECK(compare(kInterior, make_triple(0.5, 0.5, 0.5)) == ScoreOrder::Greater);
  CHECK(compare(make_triple(0.5, 0.5, 0.5), kInterior) == ScoreOrder::Less);
  CHECK(compare(make_triple(0.5, 0.1, 0.5), make_triple(0.5, 0.9, 0.5)) == ScoreOrder::Equal);
  CHECK(compare(kInterior, kInterior) == ScoreOrder::Equal);
}

TEST_CASE("crisp distances at worked points") {
  const CrispDistances crisp = crisp_distances(make_triple(1, 0, 0));
  CHECK(crisp.to_true == 0.0);
  CHECK(crisp.to_false == 2.0);
  const CrispDistances interior = crisp_distances(kInterior);
  CHECK(near(interior.to_true, 1.8));
  CHECK(near(interior.to_false, 2.2));
}

TEST_CASE("entropies at worked points") {
  CHECK(near(entropy_czekanowski(kInterior), 0.9));
  CHECK(near(entropy_ruzicka(kInterior), 0.81818181818181812));
  CHECK(entropy_czekanowski(make_triple(1, 0, 0)) == 0.0);
  CHECK(entropy_ruzicka(make_triple(1, 0, 0)) == 0.0);
  CHECK(entropy_czekanowski(make_triple(0, 0, 1)) == 0.0);
  CHECK(entropy_czekanowski(make_triple(0.5, 0.2, 0.5)) == 1.0);
  CHECK(entropy_ruzicka(make_triple(0.5, 0.2, 0.5)) == 1.0);
}

TEST_CASE("closed forms equal the distance-based constructions") {
  testutil::Rng rng(37);
  for (int k = 0; k < 20000; ++k) {
    const NeutrosophicTriple q = testutil::random_triple(rng);
    const CrispDistances d = crisp_distances(q);
    const double czek = 1.0 - std::fabs(d.to_true - d.to_false) / (d.to_true + d.to_false);
    const double ruz = 1.0 - std::fabs(d.to_true - d.to_false) / std::max(d.to_true, d.to_false);
    CHECK(near(entropy_czekanowski(q), czek));
    CHECK(near(entropy_ruzicka(q), ruz));
  }
}

TEST_CASE("entropies reduce to Kaufman and Kosko on the fuzzy line") {
  for (int k = 0; k <= 1000; ++k) {
    const double mu = k / 1000.0;
    const NeutrosophicTriple q = make_triple(mu, 0.0, 1.0 - mu);
    const double bias = std::fabs(2.0 * mu - 1.0);
    CHECK(near(entropy_czekanowski(q), 1.0 - bias));
    CHECK(near(entropy_ruzicka(q), (1.0 - bias) / (1.0 + bias)));
  }
}

TEST_CASE("entropies reduce to the intuitionistic forms on the simplex") {
  testutil::Rng rng(41);
  for (int k = 0; k < 20000; ++k) {
    const double t = testutil::uniform01(rng);
    const double i = (1.0 - t) * testutil::uniform01(rng);
    const double f = std::max(1.0 - t - i, 0.0);
    const NeutrosophicTriple q = make_triple(t, i, f);
    const double bias = std::fabs(q.t - q.f);
    CHECK(near(entropy_czekanowski(q), 1.0 - bias / (1.0 + q.i)));
    CHECK(near(entropy_ruzicka(q), (1.0 - bias + q.i) / (1.0 + bias + q.i)));
  }
}

TEST_CASE("mirror antisymmetry and ranges hold on random triples") {
  testutil::Rng rng(43);
  for (int k = 0; k < 20000; ++k) {
    const NeutrosophicTriple q = testutil::random_triple(rng);
    const NeutrosophicTriple m = swap_tf(q);
    CHECK(near(score(m), -score(q)));
    CHECK(near(net_truth(m), -net_truth(q)));
    CHECK(near(entropy_czekanowski(m), entropy_czekanowski(q)));
    CHECK(near(entropy_ruzicka(m), entropy_ruzicka(q)));

    const ScalarReport r = scalar_report(q);
    CHECK(std::fabs(r.net_truth) <= 1.0 + kExactTol);
    CHECK(std::fabs(r.definedness) <= 1.0 + kExactTol);
    CHECK(std::fabs(r.score) <= 1.0 + kExactTol);
    CHECK(r.entropy_czekanowski >= 0.0);
    CHECK(r.entropy_czekanowski <= 1.0 + kExactTol);
    CHECK(r.entropy_ruzicka >= 0.0);
    CHECK(r.entropy_ruzicka <= r.entropy_czekanowski + kExactTol);
  }
}

TEST_CASE("scalar_report composes the individual measures") {
  const ScalarReport r = scalar_report(kInterior);
  CHECK(r.net_truth == net_truth(kInterior));
  CHECK(r.mean == mean_component(kInterior));
  CHECK(r.definedness == definedness(r.mean));
  CHECK(r.score == score(kInterior));
  CHECK(r.entropy_czekanowski == entropy_czekanowski(kInterior));
  CHECK(r.entropy_ruzicka == entropy_ruzicka(kInterior));
}
