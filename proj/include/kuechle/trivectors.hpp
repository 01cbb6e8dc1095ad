#pragma once

// Alternating 3-forms, the Lie algebra sl(n) in a fixed basis, and the
// invariant form Tr([x, y] z) on sl(3).

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "kuechle/linalg.hpp"

namespace kuechle {

/// Sorted 0-based index triple i < j < k.
using Triple = std::array<std::size_t, 3>;

class TriVector {
 public:
  TriVector(Field field, std::size_t dim);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }

  /// Coefficient on e^i ^ e^j ^ e^k for any index order (antisymmetric sign,
  /// zero on repeated indices).
  FieldElem component(std::size_t i, std::size_t j, std::size_t k) const;
  /// Sets the coefficient, applying the sign of the sorting permutation.
  void set(std::size_t i, std::size_t j, std::size_t k, const FieldElem& value);

  /// All C(dim, 3) coefficients, triples in lexicographic order.
  const Vector& coefficients() const noexcept { return coeffs_; }
  static TriVector from_coefficients(Field field, std::size_t dim, Vector coeffs);
  /// Nonzero terms in lexicographic order.
  std::vector<std::pair<Triple, FieldElem>> terms() const;
  bool is_zero() const noexcept { return is_zero_vector(coeffs_); }

  /// Full multilinear evaluation.
  FieldElem eval(const Vector& v1, const Vector& v2, const Vector& v3) const;
  /// Pullback (x, y, z) -> lambda(g x, g y, g z).
  TriVector pullback(const Matrix& g) const;

  friend bool operator==(const TriVector& a, const TriVector& b) = default;

 private:
  std::size_t index(const Triple& t) const;

  Field field_;
  std::size_t dim_;
  Vector coeffs_;
  std::vector<Triple> triples_;
};

/// Basis of sl(n): E_ij (i != j) in lexicographic order, then
/// H_k = E_kk - E_{k+1,k+1}. For n = 3: E12, E13, E21, E23, E31, E32, H1, H2.
class SlBasis {
 public:
  SlBasis(Field field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t matrix_size() const noexcept { return n_; }
  std::size_t dim() const noexcept { return elements_.size(); }
  const std::vector<Matrix>& elements() const noexcept { return elements_; }
  const Matrix& element(std::size_t i) const { return elements_.at(i); }

  /// Coordinates of a traceless matrix; throws BadDimension if not traceless.
  Vector coordinates(const Matrix& x) const;
  Matrix matrix(const Vector& coords) const;
  /// Tr(e_a e_b).
  Matrix trace_gram() const;
  /// ad_x in this basis: column a holds the coordinates of [x, e_a].
  Matrix adjoint(const Matrix& x) const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<Matrix> elements_;
};

Matrix bracket(const Matrix& x, const Matrix& y);

/// lambda(x, y, z) = Tr([x, y] z) on the sl(3) basis. Throws BadCharacteristic
/// for p = 3.
TriVector trace_form(const Field& field);

/// x238 + x167 - x247 - x356 - x148 - x158 (1-based indices) on an 8-space.
TriVector kuchle_coordinate_form(const Field& field);

/// e^1 ^ e^2 ^ e^3 on an 8-space.
TriVector decomposable_form(const Field& field);

/// True iff lambda vanishes on every triple of basis vectors of U.
bool is_isotropic(const TriVector& lambda, const Subspace& u);

/// dim { xi in gl(V) : xi . lambda = 0 }.
std::size_t stabilizer_dim(const TriVector& lambda);

/// Subspace of Lambda^3 (sl(n))^* killed by ad of every basis element, in
/// coefficient coordinates. Throws BadCharacteristic unless over Q.
Subspace invariant_forms(const SlBasis& basis);

/// dim of the invariants in Lambda^3 sl(3)^* over Q, with a basis vector.
std::pair<std::size_t, TriVector> invariant_space_dim();

}  // namespace kuechle
