#pragma once

#include <array>
#include <stdexcept>

#include "neutro/core.hpp"

namespace neutro {

class ConstraintViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Partition-of-unity readings of fuzzy and bifuzzy information. They predate
// the neutrosophic decompositions and double as reduction oracles for them.

/// Three-valued reading of a single membership degree.
struct Fuzzy3Vector {
  double truth = 0;
  double ambiguity = 0;
  double falsity = 0;
  std::array<double, 3> components() const { return {truth, ambiguity, falsity}; }
};

/// Four-valued reading of an intuitionistic pair (mu + nu <= 1).
struct Ifs4Vector {
  double truth = 0;
  double ambiguity = 0;
  double under_defined = 0;
  double falsity = 0;
  std::array<double, 4> components() const { return {truth, ambiguity, under_defined, falsity}; }
};

/// Three-valued reading of a bifuzzy pair: truth, ignorance, falsity.
struct Bifuzzy3Vector {
  double truth = 0;
  double ignorance = 0;
  double falsity = 0;
  std::array<double, 3> components() const { return {truth, ignorance, falsity}; }
};

/// Tetra-valued reading keyed on definedness; over_defined * under_defined = 0.
struct Bifuzzy4DefVector {
  double truth = 0;
  double over_defined = 0;
  double under_defined = 0;
  double falsity = 0;
  std::array<double, 4> components() const {
    return {truth, over_defined, under_defined, falsity};
  }
};

/// Tetra-valued reading keyed on ignorance and contradiction; truth * falsity = 0.
struct Bifuzzy4IgnVector {
  double truth = 0;
  double contradiction = 0;
  double ignorance = 0;
  double falsity = 0;
  std::array<double, 4> components() const {
    return {truth, contradiction, ignorance, falsity};
  }
};

/// Penta-valued reading: truth, over-definedness, ambiguity, under-definedness,
/// falsity. Both exclusions hold: t*f = 0 and o*u = 0.
struct Bifuzzy5Vector {
  double truth = 0;
  double over_defined = 0;
  double ambiguity = 0;
  double under_defined = 0;
  double falsity = 0;
  std::array<double, 5> components() const {
    return {truth, over_defined, ambiguity, under_defined, falsity};
  }
};

Fuzzy3Vector fuzzy3(const UnitDegree& mu);

/// Throws ConstraintViolation when mu + nu > 1 (beyond 1e-12).
Ifs4Vector ifs4(const BifuzzyPair& p);

Bifuzzy3Vector bifuzzy3(const BifuzzyPair& p);
Bifuzzy4DefVector bifuzzy4_def(const BifuzzyPair& p);
Bifuzzy4IgnVector bifuzzy4_ign(const BifuzzyPair& p);
Bifuzzy5Vector bifuzzy5(const BifuzzyPair& p);

}  // namespace neutro
