#include "neutro/bifuzzy.hpp"

#include <algorithm>
#include <cmath>

namespace neutro {

Fuzzy3Vector fuzzy3(const UnitDegree& mu) {
  Fuzzy3Vector v;
  v.truth = std::max(2.0 * mu - 1.0, 0.0);
  v.falsity = std::max(1.0 - 2.0 * mu, 0.0);
  v.ambiguity = 1.0 - std::fabs(2.0 * mu - 1.0);
  return v;
}

Ifs4Vector ifs4(const BifuzzyPair& p) {
  const double mu = p.mu, nu = p.nu;
  if (mu + nu > 1.0 + kBoundSnapTol)
    throw ConstraintViolation("ifs4 requires mu + nu <= 1, got " + std::to_string(mu + nu));
  Ifs4Vector v;
  v.truth = std::max(mu - nu, 0.0);
  v.falsity = std::max(nu - mu, 0.0);
  v.ambiguity = 2.0 * std::min(mu, nu);
  v.under_defined = std::max(1.0 - mu - nu, 0.0);  // the snap window can leave a tiny excess
  return v;
}

Bifuzzy3Vector bifuzzy3(const BifuzzyPair& p) {
  const double mu = p.mu, nu = p.nu;
  Bifuzzy3Vector v;
  v.truth = mu - std::min(mu, nu) / 2.0;
  v.falsity = nu - std::min(mu, nu) / 2.0;
  v.ignorance = 1.0 - std::max(mu, nu);
  return v;
}

Bifuzzy4DefVector bifuzzy4_def(const BifuzzyPair& p) {
  const double mu = p.mu, nu = p.nu;
  Bifuzzy4DefVector v;
  v.truth = std::min(mu, 1.0 - nu);
  v.falsity = std::min(1.0 - mu, nu);
  v.under_defined = std::max(1.0 - mu - nu, 0.0);
  v.over_defined = std::max(mu + nu - 1.0, 0.0);
  return v;
}

Bifuzzy4IgnVector bifuzzy4_ign(const BifuzzyPair& p) {
  const double mu = p.mu, nu = p.nu;
  Bifuzzy4IgnVector v;
  v.truth = std::max(mu - nu, 0.0);
  v.falsity = std::max(nu - mu, 0.0);
  v.ignorance = 1.0 - std::max(mu, nu);
  v.contradiction = std::min(mu, nu);
  return v;
}

Bifuzzy5Vector bifuzzy5(const BifuzzyPair& p) {
  const double mu = p.mu, nu = p.nu;
  Bifuzzy5Vector v;
  v.truth = std::max(mu - nu, 0.0);
  v.falsity = std::max(nu - mu, 0.0);
  v.under_defined = std::max(1.0 - mu - nu, 0.0);
  v.over_defined = std::max(mu + nu - 1.0, 0.0);
  v.ambiguity = 1.0 - std::fabs(mu - nu) - std::fabs(mu + nu - 1.0);
  return v;
}

}  // namespace neutro
