#pragma once

#include <array>

#include "neutro/core.hpp"
#include "neutro/norms.hpp"

namespace neutro {

/// Penta-valued reading of a triple: true / neutral / saturated / unknown /
/// false. Saturation measures similarity to the fully contradictory-and-
/// neutral state (1,1,1); ignorance to the fully unknown state (0,0,0).
struct PentaSatVector {
  double truth = 0;
  double neutrality = 0;
  double saturation = 0;
  double ignorance = 0;
  double falsity = 0;

  std::array<double, 5> components() const {
    return {truth, neutrality, saturation, ignorance, falsity};
  }
  double sum() const { return truth + neutrality + saturation + ignorance + falsity; }
};

inline bool is_partition(const PentaSatVector& v, double tol = kPartitionTol) {
  const auto c = v.components();
  return check_partition(c, tol);
}

/// The tetra reading with the saturation mass min(T, I, F) split off from
/// truth, neutrality and falsity. Prototypes: T=(1,0,0), F=(0,0,1),
/// N=(0,1,0), S=(1,1,1), W=(0,0,0) map to the five unit vectors.
PentaSatVector decompose5s(const NeutrosophicTriple& q);

/// neutrality + saturation + ignorance.
double indeterminacy5s(const PentaSatVector& v);

/// (t, n, s, w, f) -> (f, n, s, w, t). An involution.
PentaSatVector negate5s(const PentaSatVector& v);

PentaSatVector union5s(const PentaSatVector& a, const PentaSatVector& b,
                       const TNormFamily& family);
PentaSatVector intersect5s(const PentaSatVector& a, const PentaSatVector& b,
                           const TNormFamily& family);

}  // namespace neutro
