#include "neutro/penta_sat.hpp"

#include <algorithm>

namespace neutro {

PentaSatVector decompose5s(const NeutrosophicTriple& q) {
  const double ti = std::min<double>(q.t, q.i);
  const double tf = std::min<double>(q.t, q.f);
  const double fi = std::min<double>(q.f, q.i);

  PentaSatVector v;
  v.saturation = std::min({ti, tf, fi});
  v.truth = clamp_rounding_negative(q.t - (ti + tf) / 2.0);
  v.falsity = clamp_rounding_negative(q.f - (fi + tf) / 2.0);
  v.neutrality = clamp_rounding_negative(q.i - (ti + fi) / 2.0);
  v.ignorance = 1.0 - std::max({q.t.value(), q.i.value(), q.f.value()});
  return v;
}

double indeterminacy5s(const PentaSatVector& v) {
  return v.neutrality + v.saturation + v.ignorance;
}

PentaSatVector negate5s(const PentaSatVector& v) {
  return {v.falsity, v.neutrality, v.saturation, v.ignorance, v.truth};
}

// Neutrality is the remainder component in both operators; the other four
// close on their own through the dual pairing.

PentaSatVector union5s(const PentaSatVector& a, const PentaSatVector& b,
                       const TNormFamily& fam) {
  PentaSatVector r;
  r.truth = fam.tconorm(a.truth, b.truth);
  r.saturation =
      fam.tconorm(a.saturation + a.truth, b.saturation + b.truth) - r.truth;
  r.falsity = fam.tnorm(a.falsity, b.falsity);
  r.ignorance = fam.tnorm(a.ignorance + a.falsity, b.ignorance + b.falsity) - r.falsity;
  r.neutrality = 1.0 - r.truth - r.saturation - r.ignorance - r.falsity;
  return r;
}

PentaSatVector intersect5s(const PentaSatVector& a, const PentaSatVector& b,
                           const TNormFamily& fam) {
  PentaSatVector r;
  r.truth = fam.tnorm(a.truth, b.truth);
  r.ignorance = fam.tnorm(a.ignorance + a.truth, b.ignorance + b.truth) - r.truth;
  r.falsity = fam.tconorm(a.falsity, b.falsity);
  r.saturation =
      fam.tconorm(a.saturation + a.falsity, b.saturation + b.falsity) - r.falsity;
  r.neutrality = 1.0 - r.truth - r.saturation - r.ignorance - r.falsity;
  return r;
}

}  // namespace neutro
