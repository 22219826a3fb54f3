#pragma once

#include <array>

#include "neutro/core.hpp"
#include "neutro/measures.hpp"
#include "neutro/norms.hpp"

namespace neutro {

/// Penta-valued reading of a triple driven by definedness: true / neutral /
/// false / over-defined / under-defined. A decomposition carries mass in at
/// most one of over_defined and under_defined (the sign of omega picks it);
/// union and intersection outputs may populate both.
struct PentaDefVector {
  double truth = 0;
  double neutrality = 0;
  double falsity = 0;
  double over_defined = 0;
  double under_defined = 0;

  std::array<double, 5> components() const {
    return {truth, neutrality, falsity, over_defined, under_defined};
  }
  double sum() const {
    return truth + neutrality + falsity + over_defined + under_defined;
  }
};

inline bool is_partition(const PentaDefVector& v, double tol = kPartitionTol) {
  const auto c = v.components();
  return check_partition(c, tol);
}

/// Splits the triple's mass by the sign of its definedness omega. Over-defined
/// items (omega > 0) shed the excess into over_defined; under-defined ones
/// (omega < 0) into under_defined; the rest is distributed over truth,
/// neutrality and falsity proportionally to T, I, F.
PentaDefVector decompose5d(const NeutrosophicTriple& q,
                           DefinednessProfile profile = kDefaultProfile);

/// neutrality + over_defined + under_defined.
double indeterminacy5d(const PentaDefVector& v);

/// (t, n, o, u, f) -> (f, n, o, u, t). An involution.
PentaDefVector negate5d(const PentaDefVector& v);

PentaDefVector union5d(const PentaDefVector& a, const PentaDefVector& b,
                       const TNormFamily& family);
PentaDefVector intersect5d(const PentaDefVector& a, const PentaDefVector& b,
                           const TNormFamily& family);

}  // namespace neutro
