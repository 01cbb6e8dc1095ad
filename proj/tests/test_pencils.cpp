#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "kuechle/pencils.hpp"
#include "kuechle/verify.hpp"
#include "support.hpp"

namespace kuechle {
namespace {

using testing::for_all;

std::vector<FieldElem> ints(const Field& f, std::initializer_list<long long> xs) {
  std::vector<FieldElem> out;
  for (long long x : xs) out.push_back(f.from_int(x));
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvariantViolation;
}

TEST(SkewPencil, ValidatesInput) {
  const Field q = Field::rational();
  const Matrix j = Matrix::from_ints(q, {{0, 1}, {-1, 0}});
  EXPECT_EQ(code_of([&] { SkewPencil(j, Matrix::identity(q, 2)); }), ErrorCode::NotSkew);
  EXPECT_EQ(code_of([&] { SkewPencil(j, q.from_int(3) * j); }), ErrorCode::NotAPencil);
  EXPECT_EQ(code_of([&] { SkewPencil(Matrix(q, 3, 3), Matrix(q, 3, 3)); }), ErrorCode::ShapeMismatch);
}

TEST(Analyze, StandardPencilIsSmooth) {
  const Field q = Field::rational();
  const SmoothnessReport r = analyze(standard_pencil(ints(q, {1, 2, 3, 4, 5})));
  EXPECT_EQ(r.verdict, Verdict::smooth);
  ASSERT_EQ(r.roots.size(), 5u);
  Subspace sum = Subspace::zero(q, 10);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(r.roots[i].multiplicity, 1);
    EXPECT_EQ(r.kernels[i].dim(), 2u);
    sum = subspace_sum(sum, r.kernels[i]);
    // The block with a_i degenerates at (a_i : 1).
    const ProjPoint1 expected = normalize_point(q.from_int(static_cast<long long>(i) + 1), q.one());
    EXPECT_TRUE(std::any_of(r.roots.begin(), r.roots.end(), [&](const auto& root) { return root.point == expected; }));
  }
  EXPECT_EQ(sum.dim(), 10u);
}

TEST(Analyze, RepeatedValueIsRepeatedRoot) {
  const Field q = Field::rational();
  const SmoothnessReport r = analyze(standard_pencil(ints(q, {1, 1, 2})));
  EXPECT_EQ(r.verdict, Verdict::singular);
  ASSERT_TRUE(r.failure.has_value());
  EXPECT_EQ(r.failure->reason, FailureReason::RepeatedRoot);
}

TEST(Analyze, FatKernel) {
  for (const Field f : {Field::rational(), Field::prime(5)}) {
    const SmoothnessReport r = analyze(fat_kernel_pencil(f));
    EXPECT_EQ(r.verdict, Verdict::singular);
    ASSERT_TRUE(r.failure.has_value());
    EXPECT_EQ(r.failure->reason, FailureReason::FatKernel);
    ASSERT_TRUE(r.failure->index.has_value());
    EXPECT_GT(r.kernels[*r.failure->index].dim(), 2u);
  }
}

TEST(Analyze, LineInDiscriminant) {
  const Field q = Field::rational();
  // Both forms kill e1, so every member is degenerate.
  Matrix a(q, 4, 4), b(q, 4, 4);
  a(1, 2) = q.one();
  a(2, 1) = -q.one();
  b(2, 3) = q.one();
  b(3, 2) = -q.one();
  const SmoothnessReport r = analyze(SkewPencil(a, b));
  EXPECT_TRUE(r.pfaffian_form.is_zero());
  ASSERT_TRUE(r.failure.has_value());
  EXPECT_EQ(r.failure->reason, FailureReason::LineInDiscriminant);
}

TEST(Analyze, NonSplitOverRationals) {
  const Field q = Field::rational();
  // A = e12 + e34, B = e13 - e24, so pf = u^2 + v^2.
  Matrix a(q, 4, 4), b(q, 4, 4);
  auto put = [&](Matrix& m, std::size_t i, std::size_t j, long long v) {
    m(i, j) = q.from_int(v);
    m(j, i) = q.from_int(-v);
  };
  put(a, 0, 1, 1);
  put(a, 2, 3, 1);
  put(b, 0, 2, 1);
  put(b, 1, 3, -1);
  const SmoothnessReport r = analyze(SkewPencil(a, b));
  EXPECT_EQ(r.verdict, Verdict::non_split);
  EXPECT_EQ(r.residual_degree, 2);
}

TEST(PfaffianForm, MatchesPointwisePfaffian) {
  const Field f = Field::prime(11);
  for_all(30, 40, [&](Rng& rng, std::size_t) {
    const std::size_t m = 2 * (1 + rng.below(3));
    Matrix a = rng.skew_matrix(f, m), b = rng.skew_matrix(f, m);
    if (proportional(flatten(a), flatten(b)) || a.is_zero() || b.is_zero()) return;
    const SkewPencil p(a, b);
    const BinaryForm form = pfaffian_form(p);
    for (const auto& pt : projective_line_points(f)) EXPECT_EQ(form.evaluate(pt.u, pt.v), pfaffian(p.member(pt)));
  });
}

TEST(PfaffianForm, ConjugationScalesByDeterminant) {
  const Field f = Field::prime(13);
  for_all(31, 30, [&](Rng& rng, std::size_t) {
    const SkewPencil p = standard_pencil(ints(f, {1, 2, 3}));
    const Matrix g = rng.invertible_matrix(f, 6);
    const BinaryForm before = pfaffian_form(p), after = pfaffian_form(p.conjugated(g));
    for (std::size_t i = 0; i < before.coeffs.size(); ++i) EXPECT_EQ(after.coeffs[i], determinant(g) * before.coeffs[i]);
    EXPECT_EQ(analyze(p.conjugated(g)).verdict, Verdict::smooth);
  });
}

TEST(StandardForm, ReproducesBlockForm) {
  const Field q = Field::rational();
  Rng rng(32);
  const SkewPencil base = standard_pencil(ints(q, {2, -1, 5}));
  for (int trial = 0; trial < 10; ++trial) {
    const SkewPencil p = base.conjugated(rng.invertible_matrix(q, 6));
    const StandardForm s = standard_form(p);
    const Matrix& m = s.pencil_change;
    const Matrix l0 = m(0, 0) * p.a() + m(0, 1) * p.b();
    const Matrix l1 = m(1, 0) * p.a() + m(1, 1) * p.b();
    const Matrix& basis = s.basis_change;
    EXPECT_EQ(basis.transpose() * l0 * basis, standard_pencil(s.a_values).a());
    EXPECT_EQ(basis.transpose() * l1 * basis, standard_pencil(s.a_values).b());
    std::set<FieldElem> distinct(s.a_values.begin(), s.a_values.end());
    EXPECT_EQ(distinct.size(), 3u);
  }
}

TEST(StandardForm, IdentityOnStandardPencil) {
  const Field q = Field::rational();
  const StandardForm s = standard_form(standard_pencil(ints(q, {1, 2, 3})));
  EXPECT_EQ(s.basis_change, Matrix::identity(q, 6));
  EXPECT_EQ(s.a_values, ints(q, {1, 2, 3}));
}

TEST(StandardForm, Errors) {
  const Field q = Field::rational();
  EXPECT_EQ(code_of([&] { standard_form(standard_pencil(ints(q, {1, 1, 2}))); }), ErrorCode::NotSmooth);
  // Over F_2 with n = 3 every point of P^1 is a root.
  const Field f2 = Field::prime(2);
  const SkewPencil all_roots = split_pencil(projective_line_points(f2));
  EXPECT_EQ(analyze(all_roots).verdict, Verdict::smooth);
  EXPECT_EQ(code_of([&] { standard_form(all_roots); }), ErrorCode::NoNondegenerateMember);
}

// Independent oracle: filter every n-dimensional subspace.
std::size_t brute_force_lagrangians(const SkewPencil& p) {
  std::size_t count = 0;
  for (const auto& u : grassmannian_points(p.field(), 2 * p.n(), p.n())) {
    if (is_isotropic_for(u, p.a()) && is_isotropic_for(u, p.b())) ++count;
  }
  return count;
}

TEST(EnumerateLagrangians, MatchesBruteForceAndFormula) {
  struct Case {
    std::size_t n;
    std::uint64_t q;
  };
  for (const Case c : {Case{2, 2}, Case{2, 3}, Case{2, 5}, Case{3, 2}}) {
    const Field f = Field::prime(c.q);
    const auto pts = projective_line_points(f);
    const SkewPencil p = split_pencil(std::vector<ProjPoint1>(pts.begin(), pts.begin() + static_cast<long>(c.n)));
    const auto e = enumerate_lagrangians(p, true);
    std::size_t expected = 1;
    for (std::size_t i = 0; i < c.n; ++i) expected *= c.q + 1;
    EXPECT_EQ(e.count, expected);
    EXPECT_EQ(e.lagrangians.size(), expected);
    EXPECT_EQ(brute_force_lagrangians(p), expected);
    EXPECT_TRUE(check_split_bijection(p).empty());
  }
}

TEST(EnumerateLagrangians, RandomPencilsMatchBruteForce) {
  const Field f = Field::prime(3);
  for_all(33, 15, [&](Rng& rng, std::size_t) {
    const Matrix a = rng.skew_matrix(f, 4), b = rng.skew_matrix(f, 4);
    if (a.is_zero() || b.is_zero() || proportional(flatten(a), flatten(b))) return;
    const SkewPencil p(a, b);
    EXPECT_EQ(enumerate_lagrangians(p, false).count, brute_force_lagrangians(p));
  });
}

TEST(EnumerateLagrangians, Guards) {
  const Field f = Field::prime(7);
  EXPECT_EQ(code_of([&] { enumerate_lagrangians(standard_pencil(ints(f, {1, 2})), false); }), ErrorCode::TooLarge);
  const Field f2 = Field::prime(2);
  const SkewPencil big = split_pencil({{f2.zero(), f2.one()}, {f2.one(), f2.zero()}, {f2.one(), f2.one()},
                                       {f2.one(), f2.one()}, {f2.one(), f2.zero()}});
  EXPECT_EQ(code_of([&] { enumerate_lagrangians(big, false); }), ErrorCode::TooLarge);
}

TEST(SplitAssemble, ErrorsAndRoundTrip) {
  const Field f = Field::prime(3);
  const auto pts = projective_line_points(f);
  const SkewPencil p = split_pencil({pts[0], pts[1]});
  const SmoothnessReport r = analyze(p);
  const auto all = enumerate_lagrangians(p, true);
  for (const auto& u : all.lagrangians) EXPECT_EQ(assemble_lagrangian(r, split_lagrangian(r, u)), u);

  EXPECT_EQ(code_of([&] { split_lagrangian(r, Subspace::full(f, 4)); }), ErrorCode::BadDimension);
  // A pairs e1 and e2 nontrivially.
  const Subspace bad = Subspace::span(f, 4, {{f.one(), f.zero(), f.zero(), f.zero()}, {f.zero(), f.one(), f.zero(), f.zero()}});
  EXPECT_EQ(code_of([&] { split_lagrangian(r, bad); }), ErrorCode::NotLagrangian);
  const auto lines = split_lagrangian(r, all.lagrangians.front());
  EXPECT_EQ(code_of([&] { assemble_lagrangian(r, {lines[1], lines[0]}); }), ErrorCode::LineNotInKernel);
}

// Independent oracle for the d3 counts: direct evaluation of the monomials.
std::uint64_t brute_count(const MultilinearForm& s) {
  const auto line = projective_line_points(s.field);
  std::uint64_t count = 0;
  std::vector<std::size_t> idx(s.n, 0);
  while (true) {
    FieldElem value = s.field.zero();
    for (std::size_t bits = 0; bits < s.coeffs.size(); ++bits) {
      FieldElem term = s.coeffs[bits];
      for (std::size_t i = 0; i < s.n; ++i) {
        const ProjPoint1& pt = line[idx[i]];
        term *= ((bits >> i) & 1) ? pt.v : pt.u;
      }
      value += term;
    }
    if (value.is_zero()) ++count;
    std::size_t i = 0;
    while (i < s.n && ++idx[i] == line.size()) idx[i++] = 0;
    if (i == s.n) break;
  }
  return count;
}

TEST(D3Counts, IdentityAndBruteForce) {
  for (std::uint64_t q : {2u, 3u, 5u}) {
    const Field f = Field::prime(q);
    for_all(34 + q, 5, [&](Rng& rng, std::size_t) {
      const std::size_t n = 2 + rng.below(3);
      if (q == 5 && n == 4) return;
      const MultilinearForm s = random_multilinear_form(f, n, rng);
      const D3Counts c = d3_point_counts(s);
      EXPECT_TRUE(c.identity_holds);
      EXPECT_EQ(c.count_x, brute_count(s));
      std::uint64_t base = 1;
      for (std::size_t i = 0; i + 1 < n; ++i) base *= q + 1;
      EXPECT_EQ(c.count_base, base);
    });
  }
}

TEST(D3Counts, ZeroFormCountsEverything) {
  const Field f = Field::prime(2);
  const MultilinearForm zero{f, 4, std::vector<FieldElem>(16, f.zero())};
  const D3Counts c = d3_point_counts(zero);
  EXPECT_EQ(c.count_x, 81u);
  EXPECT_EQ(c.count_z, 27u);
  EXPECT_TRUE(c.identity_holds);
}

TEST(B4Lines, HyperbolicQuadric) {
  // Totally singular planes of the split form: (q^3 + q^2 + q + 1)(q^2 + q + 1).
  const auto c2 = b4_line_count_check(hyperbolic_quadric(Field::prime(2)));
  EXPECT_EQ(c2.lines_on_quadric, 105u);
  EXPECT_EQ(c2.flag_divisor_count, 105u);
  EXPECT_TRUE(c2.equal);
  const auto c3 = b4_line_count_check(hyperbolic_quadric(Field::prime(3)));
  EXPECT_EQ(c3.lines_on_quadric, 40u * 13u);
  EXPECT_TRUE(c3.equal);
}

TEST(B4Lines, RejectsDegenerateQuadric) {
  const Field f = Field::prime(2);
  Matrix q = hyperbolic_quadric(f);
  q(2, 5) = q(5, 2) = f.zero();
  EXPECT_EQ(code_of([&] { b4_line_count_check(q); }), ErrorCode::DegenerateQuadric);
  EXPECT_EQ(code_of([&] { b4_line_count_check(hyperbolic_quadric(Field::prime(5))); }), ErrorCode::TooLarge);
}

}  // namespace
}  // namespace kuechle
