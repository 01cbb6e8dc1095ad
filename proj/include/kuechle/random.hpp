#pragma once

// Seeded sampling. std::mt19937_64 output is fixed by the standard; the
// bounded draw below uses plain rejection so results do not depend on the
// standard library's distribution implementations.
//
// Draw order for each helper is the order of the loops in its body
// (row-major for matrices).

#include <cstdint>
#include <random>

#include "kuechle/linalg.hpp"

namespace kuechle {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi);

  /// Uniform residue over F_p; an integer in [-bound, bound] over Q.
  FieldElem element(const Field& field, long long bound = 5);
  FieldElem nonzero_element(const Field& field, long long bound = 5);
  Matrix matrix(const Field& field, std::size_t rows, std::size_t cols, long long bound = 5);
  Matrix skew_matrix(const Field& field, std::size_t m, long long bound = 5);
  Matrix symmetric_matrix(const Field& field, std::size_t m, long long bound = 5);
  /// Rejection-samples until the determinant is nonzero.
  Matrix invertible_matrix(const Field& field, std::size_t m, long long bound = 3);
  Vector vector(const Field& field, std::size_t m, long long bound = 5);
  Vector nonzero_vector(const Field& field, std::size_t m, long long bound = 5);

 private:
  std::mt19937_64 engine_;
};

}  // namespace kuechle
