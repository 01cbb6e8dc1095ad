#include "kuechle/trivectors.hpp"

#include <algorithm>

namespace kuechle {

namespace {

// Sorts (i, j, k) in place, returning the permutation sign; 0 on a repeat.
int sort_with_sign(std::size_t& i, std::size_t& j, std::size_t& k) {
  int sign = 1;
  if (i > j) std::swap(i, j), sign = -sign;
  if (j > k) std::swap(j, k), sign = -sign;
  if (i > j) std::swap(i, j), sign = -sign;
  if (i == j || j == k) return 0;
  return sign;
}

}  // namespace

TriVector::TriVector(Field field, std::size_t dim) : field_(field), dim_(dim) {
  for (const auto& c : combinations(dim, 3)) triples_.push_back({c[0], c[1], c[2]});
  coeffs_.assign(triples_.size(), field.zero());
}

TriVector TriVector::from_coefficients(Field field, std::size_t dim, Vector coeffs) {
  TriVector t(field, dim);
  if (coeffs.size() != t.coeffs_.size()) throw Error(ErrorCode::BadDimension, "trivector coefficient count");
  t.coeffs_ = std::move(coeffs);
  return t;
}

std::size_t TriVector::index(const Triple& t) const {
  const auto it = std::lower_bound(triples_.begin(), triples_.end(), t);
  return static_cast<std::size_t>(it - triples_.begin());
}

FieldElem TriVector::component(std::size_t i, std::size_t j, std::size_t k) const {
  const int sign = sort_with_sign(i, j, k);
  if (sign == 0) return field_.zero();
  const FieldElem& c = coeffs_[index({i, j, k})];
  return sign > 0 ? c : -c;
}

void TriVector::set(std::size_t i, std::size_t j, std::size_t k, const FieldElem& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw Error(ErrorCode::BadDimension, "trivector index out of range");
  const int sign = sort_with_sign(i, j, k);
  if (sign == 0) throw Error(ErrorCode::BadDimension, "repeated trivector index");
  coeffs_[index({i, j, k})] = sign > 0 ? value : -value;
}

std::vector<std::pair<Triple, FieldElem>> TriVector::terms() const {
  std::vector<std::pair<Triple, FieldElem>> out;
  for (std::size_t t = 0; t < triples_.size(); ++t)
    if (!coeffs_[t].is_zero()) out.emplace_back(triples_[t], coeffs_[t]);
  return out;
}

FieldElem TriVector::eval(const Vector& v1, const Vector& v2, const Vector& v3) const {
  if (v1.size() != dim_ || v2.size() != dim_ || v3.size() != dim_) {
    throw Error(ErrorCode::BadDimension, "trivector argument length");
  }
  FieldElem acc = field_.zero();
  for (std::size_t t = 0; t < triples_.size(); ++t) {
    if (coeffs_[t].is_zero()) continue;
    const auto [i, j, k] = triples_[t];
    // 3x3 minor of the argument columns on rows i, j, k.
    const FieldElem minor = v1[i] * (v2[j] * v3[k] - v2[k] * v3[j]) - v1[j] * (v2[i] * v3[k] - v2[k] * v3[i]) +
                            v1[k] * (v2[i] * v3[j] - v2[j] * v3[i]);
    acc += coeffs_[t] * minor;
  }
  return acc;
}

TriVector TriVector::pullback(const Matrix& g) const {
  if (g.rows() != dim_ || g.cols() != dim_) throw Error(ErrorCode::ShapeMismatch, "pullback matrix size");
  TriVector out(field_, dim_);
  for (std::size_t t = 0; t < triples_.size(); ++t) {
    const auto [i, j, k] = triples_[t];
    out.coeffs_[t] = eval(g.col(i), g.col(j), g.col(k));
  }
  return out;
}

// ---------------------------------------------------------------------------

SlBasis::SlBasis(Field field, std::size_t n) : field_(field), n_(n) {
  if (n < 2) throw Error(ErrorCode::BadDimension, "sl(n) needs n >= 2");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix e(field, n, n);
      e(i, j) = field.one();
      elements_.push_back(std::move(e));
    }
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    Matrix h(field, n, n);
    h(k, k) = field.one();
    h(k + 1, k + 1) = -field.one();
    elements_.push_back(std::move(h));
  }
}

Vector SlBasis::coordinates(const Matrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw Error(ErrorCode::ShapeMismatch, "sl(n) element size");
  if (!x.trace().is_zero()) throw Error(ErrorCode::BadDimension, "matrix is not traceless");
  Vector c;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j) c.push_back(x(i, j));
  // diag(d) = sum h_k H_k gives h_k = d_1 + ... + d_k.
  FieldElem partial = field_.zero();
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    partial += x(k, k);
    c.push_back(partial);
  }
  return c;
}

Matrix SlBasis::matrix(const Vector& coords) const {
  if (coords.size() != dim()) throw Error(ErrorCode::BadDimension, "sl(n) coordinate count");
  Matrix x(field_, n_, n_);
  for (std::size_t a = 0; a < dim(); ++a) x += coords[a] * elements_[a];
  return x;
}

Matrix SlBasis::trace_gram() const {
  Matrix g(field_, dim(), dim());
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b) g(a, b) = (elements_[a] * elements_[b]).trace();
  return g;
}

Matrix SlBasis::adjoint(const Matrix& x) const {
  Matrix ad(field_, dim(), dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    const Vector c = coordinates(bracket(x, elements_[a]));
    for (std::size_t m = 0; m < dim(); ++m) ad(m, a) = c[m];
  }
  return ad;
}

Matrix bracket(const Matrix& x, const Matrix& y) { return x * y - y * x; }

TriVector trace_form(const Field& field) {
  if (field.characteristic() == 3) throw Error(ErrorCode::BadCharacteristic, "trace form on sl(3) needs p != 3");
  const SlBasis sl3(field, 3);
  TriVector lambda(field, 8);
  for (const auto& t : combinations(8, 3)) {
    lambda.set(t[0], t[1], t[2], (bracket(sl3.element(t[0]), sl3.element(t[1])) * sl3.element(t[2])).trace());
  }
  return lambda;
}

TriVector kuchle_coordinate_form(const Field& field) {
  TriVector lambda(field, 8);
  const FieldElem one = field.one();
  lambda.set(1, 2, 7, one);   // x238
  lambda.set(0, 5, 6, one);   // x167
  lambda.set(1, 3, 6, -one);  // x247
  lambda.set(2, 4, 5, -one);  // x356
  lambda.set(0, 3, 7, -one);  // x148
  lambda.set(0, 4, 7, -one);  // x158
  return lambda;
}

TriVector decomposable_form(const Field& field) {
  TriVector lambda(field, 8);
  lambda.set(0, 1, 2, field.one());
  return lambda;
}

bool is_isotropic(const TriVector& lambda, const Subspace& u) {
  if (u.ambient_dim() != lambda.dim()) throw Error(ErrorCode::AmbientMismatch, "isotropy test");
  if (u.dim() < 3) return true;
  const auto basis = u.basis_vectors();
  for (const auto& t : combinations(u.dim(), 3)) {
    if (!lambda.eval(basis[t[0]], basis[t[1]], basis[t[2]]).is_zero()) return false;
  }
  return true;
}

std::size_t stabilizer_dim(const TriVector& lambda) {
  // Unknown xi_{m,a} sits in column m * d + a; xi e_a = sum_m xi_{m,a} e_m.
  const std::size_t d = lambda.dim();
  const auto triples = combinations(d, 3);
  Matrix system(lambda.field(), triples.size(), d * d);
  for (std::size_t row = 0; row < triples.size(); ++row) {
    const std::size_t a = triples[row][0], b = triples[row][1], c = triples[row][2];
    for (std::size_t m = 0; m < d; ++m) {
      system(row, m * d + a) += lambda.component(m, b, c);
      system(row, m * d + b) += lambda.component(a, m, c);
      system(row, m * d + c) += lambda.component(a, b, m);
    }
  }
  return d * d - rank(system);
}

Subspace invariant_forms(const SlBasis& basis) {
  const Field& f = basis.field();
  if (!f.is_rational()) throw Error(ErrorCode::BadCharacteristic, "invariant forms are computed over Q only");
  const std::size_t d = basis.dim();
  const auto triples = combinations(d, 3);
  const std::size_t unknowns = triples.size();

  // Column index and sign of the unknown coefficient behind lambda(x, y, z).
  auto locate = [&](std::size_t x, std::size_t y, std::size_t z) -> std::pair<std::size_t, int> {
    std::size_t i = x, j = y, k = z;
    const int sign = sort_with_sign(i, j, k);
    if (sign == 0) return {0, 0};
    const std::vector<std::size_t> key{i, j, k};
    const auto it = std::lower_bound(triples.begin(), triples.end(), key);
    return {static_cast<std::size_t>(it - triples.begin()), sign};
  };

  Matrix system(f, basis.dim() * triples.size(), unknowns);
  std::size_t row = 0;
  for (const auto& x : basis.elements()) {
    const Matrix ad = basis.adjoint(x);
    for (const auto& t : triples) {
      const std::size_t a = t[0], b = t[1], c = t[2];
      for (std::size_t m = 0; m < d; ++m) {
        const std::array<std::pair<FieldElem, std::array<std::size_t, 3>>, 3> contributions = {{
            {ad(m, a), {m, b, c}},
            {ad(m, b), {a, m, c}},
            {ad(m, c), {a, b, m}},
        }};
        for (const auto& [weight, args] : contributions) {
          if (weight.is_zero()) continue;
          const auto [col, sign] = locate(args[0], args[1], args[2]);
          if (sign == 0) continue;
          system(row, col) += sign > 0 ? weight : -weight;
        }
      }
      ++row;
    }
  }
  return kernel(system);
}

std::pair<std::size_t, TriVector> invariant_space_dim() {
  const Field q = Field::rational();
  const Subspace inv = invariant_forms(SlBasis(q, 3));
  TriVector first(q, 8);
  if (inv.dim() > 0) first = TriVector::from_coefficients(q, 8, inv.basis().row(0));
  return {inv.dim(), first};
}

}  // namespace kuechle
