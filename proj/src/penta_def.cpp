#include "neutro/penta_def.hpp"

#include <cmath>

namespace neutro {

namespace {
// Positive part that never returns -0.0.
double pos(double x) { return x > 0.0 ? x : 0.0; }
}  // namespace

PentaDefVector decompose5d(const NeutrosophicTriple& q, DefinednessProfile profile) {
  const double lambda = mean_component(q);
  const double omega = definedness(lambda, profile);
  const double over = pos(omega);
  const double under = pos(-omega);
  // At lambda = 0 every profile gives omega = -1, so the denominator is 1.
  const double denom = 3.0 * lambda + under;
  const double scale = (1.0 - over) / denom;

  PentaDefVector v;
  v.truth = clamp_rounding_negative(scale * q.t);
  v.neutrality = clamp_rounding_negative(scale * q.i);
  v.falsity = clamp_rounding_negative(scale * q.f);
  v.over_defined = over;
  v.under_defined = under / denom;
  return v;
}

double indeterminacy5d(const PentaDefVector& v) {
  return v.neutrality + v.over_defined + v.under_defined;
}

PentaDefVector negate5d(const PentaDefVector& v) {
  return {v.falsity, v.neutrality, v.truth, v.over_defined, v.under_defined};
}

PentaDefVector union5d(const PentaDefVector& a, const PentaDefVector& b,
                       const TNormFamily& fam) {
  PentaDefVector r;
  r.truth = fam.tconorm(a.truth, b.truth);
  r.falsity = fam.tnorm(a.falsity, b.falsity);
  r.over_defined =
      fam.tnorm(a.over_defined + a.falsity, b.over_defined + b.falsity) - r.falsity;
  r.under_defined =
      fam.tnorm(a.under_defined + a.falsity, b.under_defined + b.falsity) - r.falsity;
  r.neutrality = 1.0 - r.truth - r.falsity - r.over_defined - r.under_defined;
  return r;
}

PentaDefVector intersect5d(const PentaDefVector& a, const PentaDefVector& b,
                           const TNormFamily& fam) {
  PentaDefVector r;
  r.truth = fam.tnorm(a.truth, b.truth);
  r.falsity = fam.tconorm(a.falsity, b.falsity);
  r.over_defined =
      fam.tnorm(a.over_defined + a.truth, b.over_defined + b.truth) - r.truth;
  r.under_defined =
      fam.tnorm(a.under_defined + a.truth, b.under_defined + b.truth) - r.truth;
  r.neutrality = 1.0 - r.truth - r.falsity - r.over_defined - r.under_defined;
  return r;
}

}  // namespace neutro
