#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "kuechle/linalg.hpp"
#include "kuechle/random.hpp"

namespace kuechle::testing {

// Runs `body(rng, case_index)` for `cases` seeded cases; the seed is part of
// the failure message so a case can be replayed.
template <class Body>
void for_all(std::uint64_t seed, std::size_t cases, Body&& body) {
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    SCOPED_TRACE(::testing::Message() << "seed " << seed << " case " << i);
    body(rng, i);
    if (::testing::Test::HasFatalFailure()) return;
  }
}

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

// Leibniz expansion.
inline FieldElem leibniz_det(const Matrix& a) {
  std::vector<std::size_t> p(a.rows());
  std::iota(p.begin(), p.end(), 0);
  FieldElem acc = a.field().zero();
  do {
    FieldElem term = a.field().from_int(permutation_sign(p));
    for (std::size_t i = 0; i < p.size(); ++i) term *= a(i, p[i]);
    acc += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

// pf(A) = 1 / (2^n n!) * sum over S_2n of sgn(s) prod a_{s(2i-1) s(2i)}.
inline FieldElem permutation_pfaffian(const Matrix& a) {
  const std::size_t m = a.rows();
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  FieldElem acc = a.field().zero();
  do {
    FieldElem term = a.field().from_int(permutation_sign(p));
    for (std::size_t i = 0; i < m; i += 2) term *= a(p[i], p[i + 1]);
    acc += term;
  } while (std::next_permutation(p.begin(), p.end()));
  long long norm = 1;
  for (std::size_t i = 1; i <= m / 2; ++i) norm *= 2 * static_cast<long long>(i);
  return acc / a.field().from_int(norm);
}

}  // namespace kuechle::testing
