#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "neutro/core.hpp"

namespace neutro {

struct SelfcheckOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  double tol = kPartitionTol;  // partition sums and component nonnegativity
};

struct PropertyResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_counterexample;  // empty while the property holds

  bool passed() const { return failures == 0; }
};

struct SelfcheckSummary {
  std::vector<PropertyResult> properties;

  bool all_passed() const;
};

/// Exercises every module's invariant suite on seeded random inputs.
/// Deterministic for a fixed seed; property failures are collected, not thrown.
SelfcheckSummary run_selfcheck(const SelfcheckOptions& options);

/// One line per property plus a final tally. Output depends only on the
/// options and the summary, so a fixed seed reproduces it byte for byte.
void write_summary(std::ostream& out, const SelfcheckSummary& summary,
                   const SelfcheckOptions& options);

}  // namespace neutro
