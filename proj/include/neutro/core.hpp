#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace neutro {

// Tolerance policy, shared by the whole library:
//   kPartitionTol   partition sums and component nonnegativity
//   kExactTol       identities that are exact in real arithmetic
//   kBoundSnapTol   input snapping at the unit bounds, and the rounding-noise clamp
inline constexpr double kPartitionTol = 1e-9;
inline constexpr double kExactTol = 1e-12;
inline constexpr double kBoundSnapTol = 1e-12;

class OutOfRange : public std::out_of_range {
public:
  OutOfRange(std::string component, double value)
      : std::out_of_range("component '" + component + "' = " + std::to_string(value) +
                          " is outside [0, 1]"),
        component_(std::move(component)),
        value_(value) {}

  const std::string& component() const noexcept { return component_; }
  double value() const noexcept { return value_; }

private:
  std::string component_;
  double value_;
};

/// A degree in the unit interval. Construction rejects anything outside [0, 1];
/// it never clamps. Reads implicitly as double.
class UnitDegree {
public:
  UnitDegree() = default;
  explicit UnitDegree(double value, std::string_view name = "degree") : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) throw OutOfRange(std::string(name), value);
  }

  constexpr operator double() const noexcept { return value_; }
  constexpr double value() const noexcept { return value_; }

private:
  double value_ = 0.0;
};

/// One neutrosophic information item: independent degrees of truth, neutrality
/// and falsity. The components are not tied by any constraint; the item lives
/// anywhere in the unit cube.
struct NeutrosophicTriple {
  UnitDegree t;  // truth
  UnitDegree i;  // neutrality
  UnitDegree f;  // falsity
};

/// Independent membership / non-membership degrees, sum unconstrained in [0, 2].
struct BifuzzyPair {
  UnitDegree mu;
  UnitDegree nu;
};

namespace detail {

inline double snap_unit(double v, std::string_view name) {
  if (v >= 0.0 && v <= 1.0) return v;
  if (v < 0.0 && v >= -kBoundSnapTol) return 0.0;
  if (v > 1.0 && v <= 1.0 + kBoundSnapTol) return 1.0;
  throw OutOfRange(std::string(name), v);  // also reached for NaN
}

inline std::atomic<std::uint64_t> clamp_count{0};

}  // namespace detail

/// Validates (T, I, F). Values within 1e-12 of a bound are snapped to it;
/// anything further out throws OutOfRange naming the offending component.
inline NeutrosophicTriple make_triple(double t, double i, double f) {
  return {UnitDegree(detail::snap_unit(t, "T"), "T"),
          UnitDegree(detail::snap_unit(i, "I"), "I"),
          UnitDegree(detail::snap_unit(f, "F"), "F")};
}

inline BifuzzyPair make_pair(double mu, double nu) {
  return {UnitDegree(detail::snap_unit(mu, "mu"), "mu"),
          UnitDegree(detail::snap_unit(nu, "nu"), "nu")};
}

/// Source-level mirror (T, I, F) -> (F, I, T). An involution.
inline NeutrosophicTriple swap_tf(const NeutrosophicTriple& q) { return {q.f, q.i, q.t}; }

/// True iff every component is >= -tol and the components sum to 1 within tol.
inline bool check_partition(std::span<const double> components, double tol = kPartitionTol) {
  double sum = 0.0;
  for (double c : components) {
    if (!(c >= -tol)) return false;
    sum += c;
  }
  return std::fabs(sum - 1.0) <= tol;
}

/// Snaps cancellation noise in [-1e-12, 0) to zero and counts the event.
/// More negative values pass through untouched so that partition checks can
/// flag genuine formula errors instead of silently absorbing them.
inline double clamp_rounding_negative(double v) {
  if (v < 0.0 && v >= -kBoundSnapTol) {
    detail::clamp_count.fetch_add(1, std::memory_order_relaxed);
    return 0.0;
  }
  return v;
}

inline std::uint64_t partition_clamp_count() {
  return detail::clamp_count.load(std::memory_order_relaxed);
}

inline void reset_partition_clamp_count() {
  detail::clamp_count.store(0, std::memory_order_relaxed);
}

}  // namespace neutro
