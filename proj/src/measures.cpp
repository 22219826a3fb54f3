#include "neutro/measures.hpp"

#include <cmath>
#include <numbers>

#include "neutro/norms.hpp"

namespace neutro {

DefinednessProfile parse_profile(std::string_view name) {
  if (name == "rational") return DefinednessProfile::Rational;
  if (name == "sine") return DefinednessProfile::Sine;
  if (name == "quadratic") return DefinednessProfile::Quadratic;
  if (name == "piecewise") return DefinednessProfile::PiecewiseLinear;
  if (name == "sqrt") return DefinednessProfile::SquareRoot;
  throw InvalidParameter("unknown definedness profile '" + std::string(name) +
                         "' (expected rational | sine | quadratic | piecewise | sqrt)");
}

std::string_view profile_name(DefinednessProfile profile) {
  switch (profile) {
    case DefinednessProfile::Rational:
      return "rational";
    case DefinednessProfile::Sine:
      return "sine";
    case DefinednessProfile::Quadratic:
      return "quadratic";
    case DefinednessProfile::PiecewiseLinear:
      return "piecewise";
    case DefinednessProfile::SquareRoot:
      return "sqrt";
  }
  return {};
}

double net_truth(const NeutrosophicTriple& q) {
  return (q.t - q.f) / (1.0 + q.i);  // denominator >= 1
}

double mean_component(const NeutrosophicTriple& q) { return (q.t + q.i + q.f) / 3.0; }

double definedness(double lambda, DefinednessProfile profile) {
  switch (profile) {
    case DefinednessProfile::Rational:
      return (3.0 * lambda - 1.0) / (1.0 + lambda);
    case DefinednessProfile::Sine:
      return 2.0 * std::sin(lambda * std::numbers::pi / 2.0) - 1.0;
    case DefinednessProfile::Quadratic:
      return (7.0 * lambda - 3.0 * lambda * lambda) / 2.0 - 1.0;
    case DefinednessProfile::PiecewiseLinear:
      return (9.0 * lambda - 3.0 - std::fabs(3.0 * lambda - 1.0)) / 4.0;
    case DefinednessProfile::SquareRoot: {
      const double a = std::sqrt(2.0 * lambda);
      const double b = std::sqrt(1.0 - lambda);
      return (a - b) / (a + b);  // a + b > 0 everywhere on [0, 1]
    }
  }
  return 0.0;
}

double score(const NeutrosophicTriple& q, DefinednessProfile profile) {
  const double omega = definedness(mean_component(q), profile);
  return net_truth(q) / (1.0 + std::fabs(omega));
}

ScoreOrder compare(const NeutrosophicTriple& a, const NeutrosophicTriple& b,
                   DefinednessProfile profile) {
  const double da = score(a, profile);
  const double db = score(b, profile);
  if (std::fabs(da - db) <= kExactTol) return ScoreOrder::Equal;
  return da > db ? ScoreOrder::Greater : ScoreOrder::Less;
}

CrispDistances crisp_distances(const NeutrosophicTriple& q) {
  const double drift = std::fabs(q.t + q.i + q.f - 1.0);
  CrispDistances d;
  d.to_true = std::fabs(q.t - q.f - 1.0) + drift + q.i;
  d.to_false = std::fabs(q.t - q.f + 1.0) + drift + q.i;
  return d;
}

double entropy_czekanowski(const NeutrosophicTriple& q) {
  const double drift = std::fabs(q.t + q.i + q.f - 1.0);
  return 1.0 - std::fabs(q.t - q.f) / (1.0 + q.i + drift);
}

double entropy_ruzicka(const NeutrosophicTriple& q) {
  const double bias = std::fabs(q.t - q.f);
  const double drift = std::fabs(q.t + q.i + q.f - 1.0);
  return (1.0 - bias + q.i + drift) / (1.0 + bias + q.i + drift);
}

ScalarReport scalar_report(const NeutrosophicTriple& q, DefinednessProfile profile) {
  ScalarReport r;
  r.net_truth = net_truth(q);
  r.mean = mean_component(q);
  r.definedness = definedness(r.mean, profile);
  r.score = r.net_truth / (1.0 + std::fabs(r.definedness));
  r.entropy_czekanowski = entropy_czekanowski(q);
  r.entropy_ruzicka = entropy_ruzicka(q);
  return r;
}

}  // namespace neutro
