#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "neutro/core.hpp"
#include "neutro/norms.hpp"

namespace testutil {

using Rng = std::mt19937_64;

// 53-bit uniforms; identical on every platform for a fixed seed.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline neutro::NeutrosophicTriple random_triple(Rng& rng) {
  const double t = uniform01(rng);
  const double i = uniform01(rng);
  const double f = uniform01(rng);
  return neutro::make_triple(t, i, f);
}

// The family sample used across the algebra suites.
inline std::vector<neutro::TNormFamily> acceptance_families() {
  return {neutro::TNormFamily::godel(), neutro::TNormFamily::product(),
          neutro::TNormFamily::lukasiewicz(), neutro::TNormFamily::frank(2.0),
          neutro::TNormFamily::frank(10.0)};
}

template <typename V>
inline double max_component_diff(const V& a, const V& b) {
  const auto ca = a.components();
  const auto cb = b.components();
  double d = 0.0;
  for (std::size_t k = 0; k < ca.size(); ++k) {
    d = std::max(d, std::fabs(ca[k] - cb[k]));
  }
  return d;
}

template <typename V>
inline bool exact_unit_vector(const V& v) {
  int ones = 0;
  for (double c : v.components()) {
    if (c == 1.0) {
      ++ones;
    } else if (c != 0.0) {
      return false;
    }
  }
  return ones == 1;
}

}  // namespace testutil
