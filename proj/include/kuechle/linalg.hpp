#pragma once

// Dense exact linear algebra over a Field: echelon forms, kernels,
// determinants, Pfaffians, canonical subspaces and Plucker coordinates.

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kuechle/scalars.hpp"

namespace kuechle {

using Vector = std::vector<FieldElem>;

class Matrix {
 public:
  /// Zero matrix.
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);
  static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<long long>> rows);
  /// Throws ShapeMismatch on ragged input or empty rows.
  static Matrix from_rows(Field field, const std::vector<Vector>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  FieldElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const noexcept;
  bool is_symmetric() const;
  FieldElem trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const FieldElem& s, Matrix a);
  Matrix operator-() const;
  friend Vector operator*(const Matrix& a, const Vector& x);

  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> data_;
};

/// x^T M y.
FieldElem bilinear(const Vector& x, const Matrix& m, const Vector& y);
FieldElem dot(const Vector& x, const Vector& y);
bool is_zero_vector(const Vector& x) noexcept;

struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with leftmost pivots.
Echelon row_echelon(Matrix a);
std::size_t rank(const Matrix& a);
/// Determinant by Gaussian elimination.
FieldElem determinant(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);

/// A linear subspace of k^m, stored as its reduced row echelon basis (rows).
class Subspace {
 public:
  /// Row space of the given matrix, canonicalized.
  static Subspace span(const Matrix& rows);
  static Subspace span(const Field& field, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace zero(const Field& field, std::size_t ambient);
  static Subspace full(const Field& field, std::size_t ambient);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return dim_; }
  /// dim() x ambient_dim() matrix; meaningful only when dim() > 0.
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const;
  bool contains(const Vector& x) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  /// Deterministic total order: by dimension, then entrywise.
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  Subspace(Matrix basis, std::size_t ambient, std::size_t dim)
      : basis_(std::move(basis)), ambient_(ambient), dim_(dim) {}
  Matrix basis_;
  std::size_t ambient_;
  std::size_t dim_;
};

/// {x : A x = 0}.
Subspace kernel(const Matrix& a);
Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersect(const Subspace& u, const Subspace& w);
/// {x : B(x, u) = 0 for all u in U}. Throws DegenerateForm when rank(B) < m.
Subspace orth_complement(const Subspace& u, const Matrix& form);

/// Zero diagonal and A^T = -A (the diagonal check matters in characteristic 2).
bool is_skew(const Matrix& a);

/// Pfaffian by first-row expansion, memoized on index subsets, over any
/// commutative ring T. `entry(i, j)` yields the (i, j) entry for i < j.
template <class T, class Entry>
T pfaffian_expand(std::size_t m, Entry&& entry, const T& zero, const T& one) {
  if (m % 2 == 1) return zero;
  std::map<unsigned long long, T> memo;
  auto rec = [&](auto&& self, unsigned long long mask) -> T {
    if (mask == 0) return one;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::size_t first = 0;
    while (!(mask & (1ULL << first))) ++first;
    T acc = zero;
    bool negative = false;
    for (std::size_t j = first + 1; j < m; ++j) {
      if (!(mask & (1ULL << j))) continue;
      const unsigned long long rest = mask & ~(1ULL << first) & ~(1ULL << j);
      T term = entry(first, j) * self(self, rest);
      if (negative) acc -= term;
      else acc += term;
      negative = !negative;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, m == 64 ? ~0ULL : ((1ULL << m) - 1));
}

/// pf(A) with pf([[0,1],[-1,0]]) = 1; odd size gives 0. Throws NotSkew.
FieldElem pfaffian(const Matrix& a);

/// Adjugate of a 3x3 matrix: adj(C) C = det(C) I.
Matrix adjugate3(const Matrix& c);

/// All r x r minors of an r x m matrix, column tuples in lexicographic order.
Vector plucker_minors(const Matrix& rows);
/// Plucker vector of U, normalized so its first nonzero entry is 1.
Vector plucker(const Subspace& u);
/// Scales a nonzero vector so its first nonzero entry is 1; zero stays zero.
Vector projective_normalize(Vector x);
/// Equality as projective points (both nonzero).
bool proportional(const Vector& x, const Vector& y);
bool proportional(const Matrix& a, const Matrix& b);
Vector flatten(const Matrix& a);

/// Sorted r-subsets of {0, ..., m-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t m, std::size_t r);

/// Every r-dimensional subspace of F_p^m, one reduced echelon representative
/// each, in canonical order. Throws TooLarge above `limit` subspaces.
std::vector<Subspace> grassmannian_points(const Field& field, std::size_t m, std::size_t r,
                                          std::size_t limit = 2'000'000);
/// Number of r-dimensional subspaces of F_q^m (Gaussian binomial).
unsigned long long gaussian_binomial(unsigned long long q, std::size_t m, std::size_t r);
/// |P^d(F_q)|.
unsigned long long projective_space_size(unsigned long long q, std::size_t d);

}  // namespace kuechle
