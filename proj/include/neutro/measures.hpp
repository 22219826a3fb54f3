#pragma once

#include <string_view>

#include "neutro/core.hpp"

namespace neutro {

/// Shape of the definedness curve omega: [0,1] -> [-1,1]. Every profile passes
/// through omega(0) = -1, omega(1/3) = 0, omega(1) = 1 and is nondecreasing.
enum class DefinednessProfile { Rational, Sine, Quadratic, PiecewiseLinear, SquareRoot };

inline constexpr DefinednessProfile kDefaultProfile = DefinednessProfile::Rational;

/// Accepts "rational" | "sine" | "quadratic" | "piecewise" | "sqrt".
DefinednessProfile parse_profile(std::string_view name);
std::string_view profile_name(DefinednessProfile profile);

/// Signed truth excess (T - F) / (1 + I), in [-1, 1].
double net_truth(const NeutrosophicTriple& q);

/// Component mean (T + I + F) / 3.
double mean_component(const NeutrosophicTriple& q);

/// Definedness of a component mean: positive means over-defined information,
/// zero complete, negative under-defined.
double definedness(double lambda, DefinednessProfile profile = kDefaultProfile);

/// Net truth attenuated by |definedness|; induces the order on triples.
double score(const NeutrosophicTriple& q, DefinednessProfile profile = kDefaultProfile);

enum class ScoreOrder { Less, Equal, Greater };

/// Orders two triples by score; scores within 1e-12 compare Equal.
ScoreOrder compare(const NeutrosophicTriple& a, const NeutrosophicTriple& b,
                   DefinednessProfile profile = kDefaultProfile);

/// Manhattan distances of the feature vector (T-F, T+I+F-1, I) to the images
/// of the crisp points (1,0,0) and (0,0,1).
struct CrispDistances {
  double to_true = 0;
  double to_false = 0;
};
CrispDistances crisp_distances(const NeutrosophicTriple& q);

/// Czekanowski-similarity entropy, in [0, 1]. 0 at the crisp points, 1 whenever T = F.
double entropy_czekanowski(const NeutrosophicTriple& q);

/// Ruzicka-similarity entropy, in [0, 1]. Always <= entropy_czekanowski.
double entropy_ruzicka(const NeutrosophicTriple& q);

/// All scalar features of one triple under one profile.
struct ScalarReport {
  double net_truth = 0;
  double mean = 0;
  double definedness = 0;
  double score = 0;
  double entropy_czekanowski = 0;
  double entropy_ruzicka = 0;
};
ScalarReport scalar_report(const NeutrosophicTriple& q,
                           DefinednessProfile profile = kDefaultProfile);

}  // namespace neutro
