#include "kuechle/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace kuechle {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) {
    Vector v;
    for (long long x : r) v.push_back(field.from_int(x));
    vs.push_back(std::move(v));
  }
  return from_rows(field, vs);
}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows) {
  if (rows.empty() || rows.front().empty()) throw Error(ErrorCode::ShapeMismatch, "empty matrix");
  Matrix m(field, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::ShapeMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (rows[i][j].field() != field) throw Error(ErrorCode::FieldMismatch, "matrix entry");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const FieldElem& x) { return x.is_zero(); });
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

FieldElem Matrix::trace() const {
  FieldElem t = field_.zero();
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElem& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix operator*(const FieldElem& s, Matrix a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols_ != x.size()) throw Error(ErrorCode::ShapeMismatch, "matrix-vector product");
  Vector y(a.rows_, a.field_.zero());
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
  return y;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

FieldElem bilinear(const Vector& x, const Matrix& m, const Vector& y) { return dot(x, m * y); }

FieldElem dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size() || x.empty()) throw Error(ErrorCode::ShapeMismatch, "dot product");
  FieldElem acc = x.front().field().zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

bool is_zero_vector(const Vector& x) noexcept {
  return std::all_of(x.begin(), x.end(), [](const FieldElem& c) { return c.is_zero(); });
}

// ---------------------------------------------------------------------------

Echelon row_echelon(Matrix a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const FieldElem inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const FieldElem f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return row_echelon(a).pivots.size(); }

FieldElem determinant(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  Matrix m = a;
  const std::size_t n = m.rows();
  FieldElem det = m.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return m.field().zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const FieldElem inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const FieldElem f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = a.field().one();
  }
  const Echelon e = row_echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(const Matrix& rows) {
  Echelon e = row_echelon(rows);
  const std::size_t d = e.pivots.size();
  Matrix basis(rows.field(), d, rows.cols());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) basis(i, j) = e.rref(i, j);
  return Subspace(std::move(basis), rows.cols(), d);
}

Subspace Subspace::span(const Field& field, std::size_t ambient, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return zero(field, ambient);
  for (const auto& v : vectors)
    if (v.size() != ambient) throw Error(ErrorCode::AmbientMismatch, "spanning vector length");
  return span(Matrix::from_rows(field, vectors));
}

Subspace Subspace::zero(const Field& field, std::size_t ambient) {
  return Subspace(Matrix(field, 0, ambient), ambient, 0);
}

Subspace Subspace::full(const Field& field, std::size_t ambient) {
  return span(Matrix::identity(field, ambient));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim_; ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(const Vector& x) const {
  if (x.size() != ambient_) throw Error(ErrorCode::AmbientMismatch, "membership test");
  auto vs = basis_vectors();
  vs.push_back(x);
  return rank(Matrix::from_rows(field(), vs)) == dim_;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorCode::AmbientMismatch, "containment test");
  return subspace_sum(*this, other).dim() == dim_;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.dim_ == b.dim_ && a.basis_ == b.basis_;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t j = 0; j < a.ambient_; ++j) {
      const auto c = a.basis_(i, j) <=> b.basis_(i, j);
      if (c != 0) return c < 0;
    }
  }
  return false;
}

Subspace kernel(const Matrix& a) {
  const Echelon e = row_echelon(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> vs;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, a.field().zero());
    v[free] = a.field().one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, free);
    vs.push_back(std::move(v));
  }
  return Subspace::span(a.field(), n, vs);
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(ErrorCode::AmbientMismatch, "subspace sum");
  auto vs = u.basis_vectors();
  for (auto& v : w.basis_vectors()) vs.push_back(std::move(v));
  return Subspace::span(u.field(), u.ambient_dim(), vs);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(ErrorCode::AmbientMismatch, "subspace intersection");
  const Field& f = u.field();
  const std::size_t m = u.ambient_dim();
  if (u.dim() == 0 || w.dim() == 0) return Subspace::zero(f, m);
  // Solve sum a_i u_i = sum b_j w_j.
  Matrix system(f, m, u.dim() + w.dim());
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < u.dim(); ++i) system(k, i) = u.basis()(i, k);
    for (std::size_t j = 0; j < w.dim(); ++j) system(k, u.dim() + j) = -w.basis()(j, k);
  }
  const Subspace sol = kernel(system);
  std::vector<Vector> vs;
  for (std::size_t s = 0; s < sol.dim(); ++s) {
    Vector x(m, f.zero());
    for (std::size_t i = 0; i < u.dim(); ++i)
      for (std::size_t k = 0; k < m; ++k) x[k] += sol.basis()(s, i) * u.basis()(i, k);
    vs.push_back(std::move(x));
  }
  return Subspace::span(f, m, vs);
}

Subspace orth_complement(const Subspace& u, const Matrix& form) {
  const std::size_t m = u.ambient_dim();
  if (form.rows() != m || form.cols() != m) throw Error(ErrorCode::AmbientMismatch, "form size");
  if (rank(form) < m) throw Error(ErrorCode::DegenerateForm, "bilinear form is degenerate");
  if (u.dim() == 0) return Subspace::full(u.field(), m);
  // B(x, u) = x^T B u, so the conditions are the rows (B u)^T.
  return kernel((form * u.basis().transpose()).transpose());
}

bool is_skew(const Matrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!a(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != -a(j, i)) return false;
  }
  return true;
}

FieldElem pfaffian(const Matrix& a) {
  if (!is_skew(a)) throw Error(ErrorCode::NotSkew, "Pfaffian needs a skew-symmetric matrix");
  if (a.rows() > 62) throw Error(ErrorCode::TooLarge, "Pfaffian size");
  const Field& f = a.field();
  return pfaffian_expand<FieldElem>(a.rows(), [&](std::size_t i, std::size_t j) { return a(i, j); }, f.zero(),
                                    f.one());
}

Matrix adjugate3(const Matrix& c) {
  if (c.rows() != 3 || c.cols() != 3) throw Error(ErrorCode::ShapeMismatch, "adjugate3 needs 3x3");
  Matrix adj(c.field(), 3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj(i, j) = c(r0, c0) * c(r1, c1) - c(r0, c1) * c(r1, c0);
    }
  }
  return adj;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t m, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > m) return out;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t k = r;
    while (k > 0 && idx[k - 1] == m - r + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t t = k; t < r; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

Vector plucker_minors(const Matrix& rows) {
  const std::size_t r = rows.rows();
  Vector out;
  for (const auto& cols : combinations(rows.cols(), r)) {
    Matrix minor(rows.field(), r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) minor(i, j) = rows(i, cols[j]);
    out.push_back(determinant(minor));
  }
  return out;
}

Vector plucker(const Subspace& u) {
  if (u.dim() == 0) throw Error(ErrorCode::BadDimension, "Plucker vector of the zero subspace");
  return projective_normalize(plucker_minors(u.basis()));
}

Vector projective_normalize(Vector x) {
  auto it = std::find_if(x.begin(), x.end(), [](const FieldElem& c) { return !c.is_zero(); });
  if (it == x.end()) return x;
  const FieldElem inv = it->inverse();
  for (auto& c : x) c *= inv;
  return x;
}

bool proportional(const Vector& x, const Vector& y) {
  return x.size() == y.size() && projective_normalize(x) == projective_normalize(y);
}

Vector flatten(const Matrix& a) {
  Vector out;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a(i, j));
  return out;
}

bool proportional(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && proportional(flatten(a), flatten(b));
}

unsigned long long gaussian_binomial(unsigned long long q, std::size_t m, std::size_t r) {
  if (r > m) return 0;
  unsigned long long num = 1, den = 1;
  for (std::size_t i = 0; i < r; ++i) {
    unsigned long long a = 1, b = 1;
    for (std::size_t k = 0; k < m - i; ++k) a *= q;
    for (std::size_t k = 0; k < i + 1; ++k) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

unsigned long long projective_space_size(unsigned long long q, std::size_t d) {
  return gaussian_binomial(q, d + 1, 1);
}

std::vector<Subspace> grassmannian_points(const Field& field, std::size_t m, std::size_t r, std::size_t limit) {
  if (!field.is_prime()) throw Error(ErrorCode::BadCharacteristic, "Grassmannian scan needs a finite field");
  if (r > m) return {};
  const unsigned long long q = field.characteristic();
  if (gaussian_binomial(q, m, r) > limit) throw Error(ErrorCode::TooLarge, "Grassmannian scan size");
  const auto elems = field.elements();
  std::vector<Subspace> out;
  for (const auto& pivots : combinations(m, r)) {
    // Free positions: (row i, column c) with c > pivots[i] and c not a pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = pivots[i] + 1; c < m; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(i, c);
    std::vector<std::size_t> digits(free.size(), 0);
    Matrix basis(field, r, m);
    for (std::size_t i = 0; i < r; ++i) basis(i, pivots[i]) = field.one();
    while (true) {
      for (std::size_t k = 0; k < free.size(); ++k) basis(free[k].first, free[k].second) = elems[digits[k]];
      out.push_back(Subspace::span(basis));
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kuechle
