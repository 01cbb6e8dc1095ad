#pragma once

// Pencils of skew-forms u*A + v*B on a 2n-dimensional space and their common
// Lagrangian subspaces, plus the hyperplane-section point counts on (P^1)^n
// and the line count on a quadric in P^5.

#include <cstdint>
#include <optional>
#include <vector>

#include "kuechle/linalg.hpp"
#include "kuechle/random.hpp"

namespace kuechle {

/// The forms at (1:0) and (0:1), i.e. lambda(u:v)(x, y) = x^T (uA + vB) y.
class SkewPencil {
 public:
  /// Throws NotSkew, ShapeMismatch (odd or unequal sizes) or NotAPencil
  /// (A and B linearly dependent).
  SkewPencil(Matrix a, Matrix b);

  const Matrix& a() const noexcept { return a_; }
  const Matrix& b() const noexcept { return b_; }
  const Field& field() const noexcept { return a_.field(); }
  std::size_t n() const noexcept { return a_.rows() / 2; }

  Matrix member(const FieldElem& u, const FieldElem& v) const;
  Matrix member(const ProjPoint1& p) const { return member(p.u, p.v); }
  /// The pencil P^T A P, P^T B P.
  SkewPencil conjugated(const Matrix& p) const;

 private:
  Matrix a_;
  Matrix b_;
};

/// Block-diagonal pencil: A = diag(J, ..., J), B = diag(-a_i J), J = [[0,1],[-1,0]].
SkewPencil standard_pencil(const std::vector<FieldElem>& a_values);
/// Block-diagonal pencil whose i-th block degenerates exactly at points[i].
SkewPencil split_pencil(const std::vector<ProjPoint1>& points);

enum class Verdict { smooth, singular, non_split };

enum class FailureReason { RepeatedRoot, FatKernel, NotDirectSum, LineInDiscriminant, NonSplit };

struct Failure {
  FailureReason reason;
  /// Root index for FatKernel.
  std::optional<std::size_t> index;
};

struct SmoothnessReport {
  SkewPencil pencil;
  Verdict verdict = Verdict::singular;
  BinaryForm pfaffian_form;
  std::vector<RootMultiplicity> roots;
  int residual_degree = 0;
  /// kernels[i] = ker of the member at roots[i].
  std::vector<Subspace> kernels;
  std::optional<Failure> failure;
};

const char* to_string(Verdict v) noexcept;
const char* to_string(FailureReason r) noexcept;

/// pf(uA + vB) as a degree-n binary form, expanded symbolically.
BinaryForm pfaffian_form(const SkewPencil& pencil);

/// Discriminant roots, their kernels, and the smoothness verdict.
///
/// A root whose kernel has dimension > 2 is a FatKernel when the other pencil
/// members restrict degenerately to it; otherwise a fat kernel is a repeated
/// block and is reported, together with tangential roots, as RepeatedRoot.
SmoothnessReport analyze(const SkewPencil& pencil);

struct StandardForm {
  /// Columns grouped as bases of K_1, ..., K_n.
  Matrix basis_change;
  std::vector<FieldElem> a_values;
  /// 2x2 matrix M with (lambda_0, lambda_1) = M (A, B); identity when A is
  /// nondegenerate.
  Matrix pencil_change;
};

/// Throws NotSmooth, or NoNondegenerateMember when the field is too small to
/// contain a nondegenerate member of the pencil.
StandardForm standard_form(const SkewPencil& pencil);

/// The first nondegenerate member scanning (1:0), (0:1), (1:1), (1:a) in
/// field order (a = 2, 3, ... over Q); nullopt if none exists over F_p.
std::optional<ProjPoint1> generic_member(const SkewPencil& pencil);

/// U -> (U cap K_1, ..., U cap K_n). Throws NotSmooth, BadDimension,
/// NotLagrangian.
std::vector<Subspace> split_lagrangian(const SmoothnessReport& report, const Subspace& u);

/// (l_1, ..., l_n) -> l_1 + ... + l_n, re-checked isotropic for A and B.
/// Throws LineNotInKernel naming the offending index.
Subspace assemble_lagrangian(const SmoothnessReport& report, const std::vector<Subspace>& lines);

bool is_isotropic_for(const Subspace& u, const Matrix& form);

struct LagrangianEnumeration {
  Verdict verdict = Verdict::singular;
  std::size_t count = 0;
  /// Sorted canonical forms.
  std::vector<Subspace> lagrangians;
};

/// Every n-dimensional subspace of F_q^{2n} isotropic for the whole pencil,
/// found by echelon-form backtracking. Guards: 2n <= 8, q <= 5 (TooLarge).
LagrangianEnumeration enumerate_lagrangians(const SkewPencil& pencil, bool keep_list = true);

/// s in K_1^* x ... x K_n^*, coeffs indexed by bit-vectors: bit i of the index
/// picks coordinate 0 or 1 of the i-th factor.
struct MultilinearForm {
  Field field;
  std::size_t n = 0;
  std::vector<FieldElem> coeffs;

  FieldElem evaluate(const std::vector<ProjPoint1>& points) const;
};

MultilinearForm random_multilinear_form(const Field& field, std::size_t n, Rng& rng);

struct D3Counts {
  std::uint64_t q = 0;
  std::uint64_t count_x = 0;
  std::uint64_t count_z = 0;
  std::uint64_t count_base = 0;
  bool identity_holds = false;  // count_x == count_base + q * count_z
};

/// Point counts of {s = 0} in (P^1)^n, of Z = {s_0 = s_1 = 0} in (P^1)^(n-1)
/// where s = x_n0 s_0 + x_n1 s_1, and of the base. Guards n <= 4, q <= 5.
D3Counts d3_point_counts(const MultilinearForm& s);

struct B4LineCounts {
  std::uint64_t lines_on_quadric = 0;
  std::uint64_t flag_divisor_count = 0;
  bool equal = false;
};

/// The quadric q(x) = sum_{i<=j} Q_ij x_i x_j with Q symmetric 6x6 over F_q,
/// q <= 3. Its polar form has matrix Q + diag(Q). Throws DegenerateQuadric
/// when that polar matrix has rank < 6.
B4LineCounts b4_line_count_check(const Matrix& q_form);

/// x1 x4 + x2 x5 + x3 x6.
Matrix hyperbolic_quadric(const Field& field);

}  // namespace kuechle
