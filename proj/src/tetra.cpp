#include "neutro/tetra.hpp"

#include <algorithm>
#include <cassert>

namespace neutro {

TetraVector decompose4(const NeutrosophicTriple& q) {
  const double ti = std::min<double>(q.t, q.i);
  const double tf = std::min<double>(q.t, q.f);
  const double fi = std::min<double>(q.f, q.i);
  const double m = std::min({ti, tf, fi});

  TetraVector v;
  v.truth = clamp_rounding_negative(q.t - (ti + tf) / 2.0 + m / 3.0);
  v.falsity = clamp_rounding_negative(q.f - (fi + tf) / 2.0 + m / 3.0);
  v.neutrality = clamp_rounding_negative(q.i - (ti + fi) / 2.0 + m / 3.0);
  v.ignorance = 1.0 - std::max({q.t.value(), q.i.value(), q.f.value()});
  return v;
}

double indeterminacy4(const TetraVector& v) { return v.neutrality + v.ignorance; }

TetraVector negate4(const TetraVector& v) {
  return {v.falsity, v.neutrality, v.ignorance, v.truth};
}

// The aggregates fed to the norms (n+t on the union side, w+f on the meet
// side) stay within [0, 1] for any partition vector; asserted, not clamped.
namespace {
[[maybe_unused]] bool in_unit(double x) {
  return x >= -kPartitionTol && x <= 1.0 + kPartitionTol;
}
}  // namespace

TetraVector union4(const TetraVector& a, const TetraVector& b, const TNormFamily& fam) {
  assert(in_unit(a.neutrality + a.truth) && in_unit(b.neutrality + b.truth));
  assert(in_unit(a.ignorance + a.falsity) && in_unit(b.ignorance + b.falsity));
  TetraVector r;
  r.truth = fam.tconorm(a.truth, b.truth);
  r.neutrality = fam.tconorm(a.neutrality + a.truth, b.neutrality + b.truth) - r.truth;
  r.falsity = fam.tnorm(a.falsity, b.falsity);
  r.ignorance = fam.tnorm(a.ignorance + a.falsity, b.ignorance + b.falsity) - r.falsity;
  return r;
}

TetraVector intersect4(const TetraVector& a, const TetraVector& b, const TNormFamily& fam) {
  assert(in_unit(a.ignorance + a.truth) && in_unit(b.ignorance + b.truth));
  assert(in_unit(a.neutrality + a.falsity) && in_unit(b.neutrality + b.falsity));
  TetraVector r;
  r.truth = fam.tnorm(a.truth, b.truth);
  r.ignorance = fam.tnorm(a.ignorance + a.truth, b.ignorance + b.truth) - r.truth;
  r.falsity = fam.tconorm(a.falsity, b.falsity);
  r.neutrality = fam.tconorm(a.neutrality + a.falsity, b.neutrality + b.falsity) - r.falsity;
  return r;
}

}  // namespace neutro
