#include "kuechle/pencils.hpp"

#include <algorithm>
#include <functional>

namespace kuechle {

namespace {

Matrix unit_symplectic(const Field& f) { return Matrix::from_ints(f, {{0, 1}, {-1, 0}}); }

Matrix block_diagonal(const Field& f, const std::vector<Matrix>& blocks) {
  std::size_t m = 0;
  for (const auto& b : blocks) m += b.rows();
  Matrix out(f, m, m);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(at + i, at + j) = b(i, j);
    at += b.rows();
  }
  return out;
}

// Gram matrix of `form` on the basis of `u`.
Matrix restrict_form(const Matrix& form, const Subspace& u) {
  return u.basis() * form * u.basis().transpose();
}

std::vector<std::size_t> pivot_columns(const Subspace& u) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    std::size_t j = 0;
    while (u.basis()(i, j).is_zero()) ++j;
    out.push_back(j);
  }
  return out;
}

}  // namespace

SkewPencil::SkewPencil(Matrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.field() != b_.field()) throw Error(ErrorCode::FieldMismatch, "pencil forms");
  if (!a_.is_square() || a_.rows() != b_.rows() || b_.cols() != a_.cols() || a_.rows() % 2 != 0 ||
      a_.rows() == 0) {
    throw Error(ErrorCode::ShapeMismatch, "pencil forms must be 2n x 2n of equal size");
  }
  if (!is_skew(a_) || !is_skew(b_)) throw Error(ErrorCode::NotSkew, "pencil forms must be skew");
  if (rank(Matrix::from_rows(a_.field(), {flatten(a_), flatten(b_)})) < 2) {
    throw Error(ErrorCode::NotAPencil, "A and B are linearly dependent");
  }
}

Matrix SkewPencil::member(const FieldElem& u, const FieldElem& v) const { return u * a_ + v * b_; }

SkewPencil SkewPencil::conjugated(const Matrix& p) const {
  return SkewPencil(p.transpose() * a_ * p, p.transpose() * b_ * p);
}

SkewPencil standard_pencil(const std::vector<FieldElem>& a_values) {
  if (a_values.empty()) throw Error(ErrorCode::BadDimension, "standard pencil needs n >= 1");
  const Field f = a_values.front().field();
  std::vector<ProjPoint1> points;
  for (const auto& a : a_values) points.push_back({a, f.one()});
  return split_pencil(points);
}

SkewPencil split_pencil(const std::vector<ProjPoint1>& points) {
  if (points.empty()) throw Error(ErrorCode::BadDimension, "split pencil needs n >= 1");
  const Field f = points.front().u.field();
  const Matrix j = unit_symplectic(f);
  std::vector<Matrix> a_blocks, b_blocks;
  for (const auto& p : points) {
    // u * v_i - v * u_i vanishes exactly at (u_i : v_i).
    a_blocks.push_back(p.v * j);
    b_blocks.push_back(-p.u * j);
  }
  return SkewPencil(block_diagonal(f, a_blocks), block_diagonal(f, b_blocks));
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::smooth: return "smooth";
    case Verdict::singular: return "singular";
    case Verdict::non_split: return "non_split";
  }
  return "?";
}

const char* to_string(FailureReason r) noexcept {
  switch (r) {
    case FailureReason::RepeatedRoot: return "RepeatedRoot";
    case FailureReason::FatKernel: return "FatKernel";
    case FailureReason::NotDirectSum: return "NotDirectSum";
    case FailureReason::LineInDiscriminant: return "LineInDiscriminant";
    case FailureReason::NonSplit: return "NonSplit";
  }
  return "?";
}

BinaryForm pfaffian_form(const SkewPencil& pencil) {
  // pf(uA + vB) = u^n pf(A + tB) with t = v/u, so the coefficient of t^i is
  // the coefficient of u^(n-i) v^i.
  const Field& f = pencil.field();
  const std::size_t m = 2 * pencil.n();
  const Poly pf = pfaffian_expand<Poly>(
      m, [&](std::size_t i, std::size_t j) { return Poly::linear(pencil.a()(i, j), pencil.b()(i, j)); }, Poly(),
      Poly(f.one()));
  BinaryForm out{f, {}};
  for (std::size_t i = 0; i <= pencil.n(); ++i) out.coeffs.push_back(pf.coeff(i, f));
  return out;
}

SmoothnessReport analyze(const SkewPencil& pencil) {
  SmoothnessReport r{pencil, Verdict::singular, pfaffian_form(pencil), {}, 0, {}, std::nullopt};
  const std::size_t n = pencil.n();
  const Field& f = pencil.field();

  if (r.pfaffian_form.is_zero()) {
    r.verdict = Verdict::singular;
    r.failure = Failure{FailureReason::LineInDiscriminant, std::nullopt};
    return r;
  }
  const BinaryFormRoots roots = binary_form_roots(r.pfaffian_form);
  r.roots = roots.roots;
  r.residual_degree = roots.residual_degree;
  for (const auto& root : r.roots) r.kernels.push_back(kernel(pencil.member(root.point)));

  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    if (r.kernels[i].dim() <= 2) continue;
    // Every other member restricts to K_i as a multiple of one form.
    const ProjPoint1 other = r.roots[i].point.v.is_zero() ? ProjPoint1{f.zero(), f.one()}
                                                           : ProjPoint1{f.one(), f.zero()};
    const Matrix gram = restrict_form(pencil.member(other), r.kernels[i]);
    if (rank(gram) < r.kernels[i].dim()) {
      r.verdict = Verdict::singular;
      r.failure = Failure{FailureReason::FatKernel, i};
      return r;
    }
  }
  for (const auto& root : r.roots) {
    if (root.multiplicity > 1) {
      r.verdict = Verdict::singular;
      r.failure = Failure{FailureReason::RepeatedRoot, std::nullopt};
      return r;
    }
  }
  if (!roots.splits()) {
    r.verdict = Verdict::non_split;
    r.failure = Failure{FailureReason::NonSplit, std::nullopt};
    return r;
  }
  std::size_t total = 0;
  Subspace sum = Subspace::zero(f, 2 * n);
  for (std::size_t i = 0; i < r.kernels.size(); ++i) {
    if (r.kernels[i].dim() != 2) {
      r.verdict = Verdict::singular;
      r.failure = Failure{FailureReason::FatKernel, i};
      return r;
    }
    total += r.kernels[i].dim();
    sum = subspace_sum(sum, r.kernels[i]);
  }
  if (r.roots.size() != n || total != 2 * n || sum.dim() != 2 * n) {
    r.verdict = Verdict::singular;
    r.failure = Failure{FailureReason::NotDirectSum, std::nullopt};
    return r;
  }
  r.verdict = Verdict::smooth;
  return r;
}

std::optional<ProjPoint1> generic_member(const SkewPencil& pencil) {
  const Field& f = pencil.field();
  std::vector<ProjPoint1> scan = {{f.one(), f.zero()}, {f.zero(), f.one()}, {f.one(), f.one()}};
  if (f.is_prime()) {
    for (std::uint32_t a = 2; a < f.characteristic(); ++a) scan.push_back({f.one(), f.from_int(a)});
  } else {
    // At most n members are degenerate, so n + 1 further candidates suffice.
    for (std::size_t a = 2; a <= pencil.n() + 2; ++a) scan.push_back({f.one(), f.from_int(static_cast<long long>(a))});
  }
  for (const auto& p : scan) {
    if (!pfaffian(pencil.member(p)).is_zero()) return p;
  }
  return std::nullopt;
}

StandardForm standard_form(const SkewPencil& pencil) {
  const SmoothnessReport r = analyze(pencil);
  if (r.verdict != Verdict::smooth) throw Error(ErrorCode::NotSmooth, "standard form needs a smooth pencil");
  const Field& f = pencil.field();
  const auto p0 = generic_member(pencil);
  if (!p0) throw Error(ErrorCode::NoNondegenerateMember, "no nondegenerate member over " + f.to_string());

  Matrix change(f, 2, 2);
  if (!p0->u.is_zero()) {
    change = Matrix::from_rows(f, {{p0->u, p0->v}, {f.zero(), f.one()}});
  } else {
    change = Matrix::from_ints(f, {{0, 1}, {1, 0}});
  }
  const Matrix lambda0 = change(0, 0) * pencil.a() + change(0, 1) * pencil.b();
  const Matrix lambda1 = change(1, 0) * pencil.a() + change(1, 1) * pencil.b();

  std::vector<std::size_t> order(r.kernels.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return pivot_columns(r.kernels[x]) < pivot_columns(r.kernels[y]); });

  const std::size_t m = 2 * pencil.n();
  StandardForm out{Matrix(f, m, m), {}, change};
  std::size_t col = 0;
  for (std::size_t idx : order) {
    const auto basis = r.kernels[idx].basis_vectors();
    const Vector& k1 = basis[0];
    Vector k2 = basis[1];
    const FieldElem pairing = bilinear(k1, lambda0, k2);
    if (pairing.is_zero()) {
      throw Error(ErrorCode::InvariantViolation, "generic member degenerates on a kernel block");
    }
    const FieldElem inv = pairing.inverse();
    for (auto& x : k2) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      out.basis_change(i, col) = k1[i];
      out.basis_change(i, col + 1) = k2[i];
    }
    out.a_values.push_back(-bilinear(k1, lambda1, k2));
    col += 2;
  }
  return out;
}

bool is_isotropic_for(const Subspace& u, const Matrix& form) {
  if (u.dim() == 0) return true;
  return restrict_form(form, u).is_zero();
}

std::vector<Subspace> split_lagrangian(const SmoothnessReport& report, const Subspace& u) {
  if (report.verdict != Verdict::smooth) throw Error(ErrorCode::NotSmooth, "split needs a smooth pencil");
  const SkewPencil& p = report.pencil;
  if (u.ambient_dim() != 2 * p.n()) throw Error(ErrorCode::AmbientMismatch, "subspace ambient dimension");
  if (u.dim() != p.n()) throw Error(ErrorCode::BadDimension, "Lagrangian must have dimension n");
  if (!is_isotropic_for(u, p.a()) || !is_isotropic_for(u, p.b())) {
    throw Error(ErrorCode::NotLagrangian, "U is not isotropic for both forms");
  }
  std::vector<Subspace> lines;
  for (const auto& k : report.kernels) {
    Subspace line = subspace_intersect(u, k);
    if (line.dim() != 1) throw Error(ErrorCode::InvariantViolation, "U meets a kernel block in dim != 1");
    lines.push_back(std::move(line));
  }
  return lines;
}

Subspace assemble_lagrangian(const SmoothnessReport& report, const std::vector<Subspace>& lines) {
  if (report.verdict != Verdict::smooth) throw Error(ErrorCode::NotSmooth, "assemble needs a smooth pencil");
  const SkewPencil& p = report.pencil;
  if (lines.size() != p.n()) throw Error(ErrorCode::BadDimension, "need one line per kernel block");
  Subspace u = Subspace::zero(p.field(), 2 * p.n());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].dim() != 1 || lines[i].ambient_dim() != 2 * p.n() || !report.kernels[i].contains(lines[i])) {
      throw Error(ErrorCode::LineNotInKernel, "line " + std::to_string(i) + " is not a line of K_" + std::to_string(i));
    }
    u = subspace_sum(u, lines[i]);
  }
  if (u.dim() != p.n() || !is_isotropic_for(u, p.a()) || !is_isotropic_for(u, p.b())) {
    throw Error(ErrorCode::InvariantViolation, "assembled subspace is not a common Lagrangian");
  }
  return u;
}

LagrangianEnumeration enumerate_lagrangians(const SkewPencil& pencil, bool keep_list) {
  const Field& f = pencil.field();
  if (!f.is_prime()) throw Error(ErrorCode::BadCharacteristic, "enumeration needs a finite field");
  const std::size_t n = pencil.n();
  const std::size_t m = 2 * n;
  if (m > 8 || f.characteristic() > 5) throw Error(ErrorCode::TooLarge, "enumeration guard: 2n <= 8, q <= 5");

  LagrangianEnumeration out;
  out.verdict = analyze(pencil).verdict;
  const auto elems = f.elements();
  const std::size_t q = elems.size();

  for (const auto& pivots : combinations(m, n)) {
    std::vector<Vector> rows;
    std::function<void(std::size_t)> fill = [&](std::size_t r) {
      if (r == n) {
        ++out.count;
        if (keep_list) out.lagrangians.push_back(Subspace::span(f, m, rows));
        return;
      }
      std::vector<std::size_t> free;
      for (std::size_t c = pivots[r] + 1; c < m; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.push_back(c);
      std::vector<std::size_t> digits(free.size(), 0);
      while (true) {
        Vector row(m, f.zero());
        row[pivots[r]] = f.one();
        for (std::size_t k = 0; k < free.size(); ++k) row[free[k]] = elems[digits[k]];
        bool ok = true;
        for (const auto& prev : rows) {
          if (!bilinear(prev, pencil.a(), row).is_zero() || !bilinear(prev, pencil.b(), row).is_zero()) {
            ok = false;
            break;
          }
        }
        if (ok) {
          rows.push_back(std::move(row));
          fill(r + 1);
          rows.pop_back();
        }
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
        if (k == digits.size()) break;
      }
    };
    fill(0);
  }
  std::sort(out.lagrangians.begin(), out.lagrangians.end());
  return out;
}

// ---------------------------------------------------------------------------

FieldElem MultilinearForm::evaluate(const std::vector<ProjPoint1>& points) const {
  if (points.size() != n) throw Error(ErrorCode::BadDimension, "multilinear form arity");
  FieldElem acc = field.zero();
  for (std::size_t bits = 0; bits < coeffs.size(); ++bits) {
    if (coeffs[bits].is_zero()) continue;
    FieldElem term = coeffs[bits];
    for (std::size_t i = 0; i < n; ++i) term *= ((bits >> i) & 1) ? points[i].v : points[i].u;
    acc += term;
  }
  return acc;
}

MultilinearForm random_multilinear_form(const Field& field, std::size_t n, Rng& rng) {
  MultilinearForm s{field, n, {}};
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) s.coeffs.push_back(rng.element(field));
  return s;
}

namespace {

// Calls visit(points) for every point of (P^1)^k over the field.
void for_each_product_point(const Field& f, std::size_t k,
                            const std::function<void(const std::vector<ProjPoint1>&)>& visit) {
  const auto line = projective_line_points(f);
  std::vector<std::size_t> digits(k, 0);
  std::vector<ProjPoint1> pts(k, line.front());
  while (true) {
    for (std::size_t i = 0; i < k; ++i) pts[i] = line[digits[i]];
    visit(pts);
    std::size_t i = 0;
    while (i < k && ++digits[i] == line.size()) digits[i++] = 0;
    if (i == k) break;
  }
}

}  // namespace

D3Counts d3_point_counts(const MultilinearForm& s) {
  const Field& f = s.field;
  if (!f.is_prime()) throw Error(ErrorCode::BadCharacteristic, "point counts need a finite field");
  if (s.n < 2 || s.n > 4 || f.characteristic() > 5) throw Error(ErrorCode::TooLarge, "guard: 2 <= n <= 4, q <= 5");
  if (s.coeffs.size() != (std::size_t{1} << s.n)) throw Error(ErrorCode::BadDimension, "need 2^n coefficients");

  D3Counts out;
  out.q = f.characteristic();
  for_each_product_point(f, s.n, [&](const std::vector<ProjPoint1>& pts) {
    if (s.evaluate(pts).is_zero()) ++out.count_x;
  });

  // s = x_{n,0} s_0 + x_{n,1} s_1 with s_0, s_1 forms on the first n - 1 factors.
  const std::size_t last = s.n - 1;
  MultilinearForm s0{f, last, {}}, s1{f, last, {}};
  for (std::size_t bits = 0; bits < s.coeffs.size(); ++bits) {
    ((bits >> last) & 1 ? s1 : s0).coeffs.push_back(s.coeffs[bits]);
  }
  for_each_product_point(f, last, [&](const std::vector<ProjPoint1>& pts) {
    ++out.count_base;
    if (s0.evaluate(pts).is_zero() && s1.evaluate(pts).is_zero()) ++out.count_z;
  });
  out.identity_holds = out.count_x == out.count_base + out.q * out.count_z;
  return out;
}

Matrix hyperbolic_quadric(const Field& field) {
  Matrix q(field, 6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    q(i, i + 3) = field.one();
    q(i + 3, i) = field.one();
  }
  return q;
}

B4LineCounts b4_line_count_check(const Matrix& q_form) {
  const Field& f = q_form.field();
  if (!f.is_prime() || f.characteristic() > 3) throw Error(ErrorCode::TooLarge, "line count guard: F_q with q <= 3");
  if (q_form.rows() != 6 || q_form.cols() != 6) throw Error(ErrorCode::ShapeMismatch, "quadric matrix must be 6x6");
  if (!q_form.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "quadric matrix must be symmetric");
  Matrix polar = q_form;
  for (std::size_t i = 0; i < 6; ++i) polar(i, i) += q_form(i, i);
  if (rank(polar) < 6) throw Error(ErrorCode::DegenerateQuadric, "quadric is degenerate");

  auto quad = [&](const Vector& x) {
    FieldElem acc = f.zero();
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i; j < 6; ++j) acc += q_form(i, j) * x[i] * x[j];
    return acc;
  };

  B4LineCounts out;
  for (const auto& u : grassmannian_points(f, 6, 2)) {
    const Vector x = u.basis().row(0), y = u.basis().row(1);
    if (quad(x).is_zero() && quad(y).is_zero() && bilinear(x, polar, y).is_zero()) ++out.lines_on_quadric;
  }
  const auto points = grassmannian_points(f, 4, 1);
  for (const auto& x : points) {
    for (const auto& xi : points) {
      if (dot(x.basis().row(0), xi.basis().row(0)).is_zero()) ++out.flag_divisor_count;
    }
  }
  out.equal = out.lines_on_quadric == out.flag_divisor_count;
  return out;
}

}  // namespace kuechle
