#pragma once

// The verify-all runner: a fixed registry of checks, each with a statement of
// the claim it tests, run from one seeded stream.

#include <cstdint>
#include <string>
#include <vector>

#include "kuechle/io.hpp"

namespace kuechle {

struct RunConfig {
  std::uint64_t seed = 0;
  /// Sample budget; 0 keeps only the structural (non-sampled) checks.
  std::size_t budget = 100;
};

struct CheckResult {
  std::string name;
  /// The mathematical statement being checked.
  std::string anchor;
  bool passed = false;
  /// Observed values; witnesses on failure.
  nlohmann::json details;
};

struct VerificationReport {
  RunConfig config;
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
};

/// Runs every registered check in registry order. Failures, including thrown
/// errors, become failed entries.
VerificationReport verify_all(const RunConfig& config);

/// Stable serialization: sorted keys, no timings.
nlohmann::json to_json(const VerificationReport& r);

/// Fixed fat-kernel pencil on k^6: A = e12 + e35 + e46, B = e56.
SkewPencil fat_kernel_pencil(const Field& field);

/// Checks that split/assemble is a bijection between the common Lagrangians
/// of a smooth pencil over F_q and tuples of lines in its kernels. Returns an
/// empty string on success, otherwise a description of the first failure.
std::string check_split_bijection(const SkewPencil& pencil);

}  // namespace kuechle
