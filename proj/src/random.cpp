#include "kuechle/random.hpp"

namespace kuechle {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

long long Rng::between(long long lo, long long hi) {
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

FieldElem Rng::element(const Field& field, long long bound) {
  if (field.is_prime()) return field.from_int(static_cast<long long>(below(field.characteristic())));
  return field.from_int(between(-bound, bound));
}

FieldElem Rng::nonzero_element(const Field& field, long long bound) {
  FieldElem x = element(field, bound);
  while (x.is_zero()) x = element(field, bound);
  return x;
}

Matrix Rng::matrix(const Field& field, std::size_t rows, std::size_t cols, long long bound) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = element(field, bound);
  return m;
}

Matrix Rng::skew_matrix(const Field& field, std::size_t m, long long bound) {
  Matrix a(field, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      a(i, j) = element(field, bound);
      a(j, i) = -a(i, j);
    }
  }
  return a;
}

Matrix Rng::symmetric_matrix(const Field& field, std::size_t m, long long bound) {
  Matrix a(field, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      a(i, j) = element(field, bound);
      a(j, i) = a(i, j);
    }
  }
  return a;
}

Matrix Rng::invertible_matrix(const Field& field, std::size_t m, long long bound) {
  while (true) {
    Matrix g = matrix(field, m, m, bound);
    if (!determinant(g).is_zero()) return g;
  }
}

Vector Rng::vector(const Field& field, std::size_t m, long long bound) {
  Vector v;
  v.reserve(m);
  for (std::size_t i = 0; i < m; ++i) v.push_back(element(field, bound));
  return v;
}

Vector Rng::nonzero_vector(const Field& field, std::size_t m, long long bound) {
  while (true) {
    Vector v = vector(field, m, bound);
    if (!is_zero_vector(v)) return v;
  }
}

}  // namespace kuechle
