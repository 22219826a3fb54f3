#pragma once

#include <array>

#include "neutro/core.hpp"
#include "neutro/norms.hpp"

namespace neutro {

/// Tetra-valued reading of a triple: true / neutral / unknown / false.
/// Components form a partition of unity; indeterminacy splits into
/// neutrality + ignorance.
struct TetraVector {
  double truth = 0;
  double neutrality = 0;
  double ignorance = 0;
  double falsity = 0;

  std::array<double, 4> components() const { return {truth, neutrality, ignorance, falsity}; }
  double sum() const { return truth + neutrality + ignorance + falsity; }
};

inline bool is_partition(const TetraVector& v, double tol = kPartitionTol) {
  const auto c = v.components();
  return check_partition(c, tol);
}

/// Compresses the unit cube onto the tetrahedron spanned by the prototypes
/// T=(1,0,0), N=(0,1,0), F=(0,0,1), W=(0,0,0).
TetraVector decompose4(const NeutrosophicTriple& q);

/// neutrality + ignorance.
double indeterminacy4(const TetraVector& v);

/// (t, n, w, f) -> (f, n, w, t). An involution.
TetraVector negate4(const TetraVector& v);

TetraVector union4(const TetraVector& a, const TetraVector& b, const TNormFamily& family);
TetraVector intersect4(const TetraVector& a, const TetraVector& b, const TNormFamily& family);

}  // namespace neutro
