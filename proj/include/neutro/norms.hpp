#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace neutro {

class InvalidParameter : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class TNormKind { Godel, Product, Lukasiewicz, Frank };

/// A member of the Frank family of t-norms paired with its De Morgan dual
/// t-conorm. Godel (min) is the s->0 limit, Product is s=1 and Lukasiewicz
/// the s->inf limit; Frank(s) covers the interior of the family.
///
/// Every member satisfies tnorm(x,y) + tconorm(x,y) = x + y, the functional
/// equation that singles the family out.
class TNormFamily {
public:
  static TNormFamily godel() { return {TNormKind::Godel, 0.0}; }
  static TNormFamily product() { return {TNormKind::Product, 1.0}; }
  static TNormFamily lukasiewicz() { return {TNormKind::Lukasiewicz, 0.0}; }

  /// Throws InvalidParameter unless s > 0 and s != 1.
  static TNormFamily frank(double s);

  /// Accepts "godel" | "product" | "lukasiewicz" | "frank:<s>".
  static TNormFamily parse(std::string_view spec);

  /// Conjunction x AND y. Result in [0, 1].
  double tnorm(double x, double y) const;

  /// Disjunction, always the De Morgan dual: 1 - tnorm(1-x, 1-y).
  double tconorm(double x, double y) const;

  TNormKind kind() const { return kind_; }
  double frank_parameter() const { return frank_s_; }

  /// Round-trips through parse().
  std::string name() const;

private:
  TNormFamily(TNormKind kind, double s) : kind_(kind), frank_s_(s) {}

  TNormKind kind_;
  double frank_s_;
};

}  // namespace neutro
