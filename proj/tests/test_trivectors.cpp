#include <gtest/gtest.h>

#include "kuechle/trivectors.hpp"
#include "support.hpp"

namespace kuechle {
namespace {

using testing::for_all;

TriVector random_trivector(const Field& f, std::size_t dim, Rng& rng) {
  TriVector t(f, dim);
  return TriVector::from_coefficients(f, dim, rng.vector(f, t.coefficients().size(), 3));
}

TEST(TriVector, ComponentIsAlternating) {
  const Field q = Field::rational();
  TriVector t(q, 5);
  t.set(3, 0, 2, q.from_int(7));  // (3, 0, 2) is an even permutation of (0, 2, 3)
  EXPECT_EQ(t.component(0, 2, 3), q.from_int(7));
  EXPECT_EQ(t.component(2, 0, 3), q.from_int(-7));
  EXPECT_EQ(t.component(3, 0, 2), q.from_int(7));
  EXPECT_TRUE(t.component(1, 1, 2).is_zero());
  EXPECT_THROW(t.set(1, 1, 2, q.one()), Error);
  EXPECT_THROW(t.set(0, 1, 5, q.one()), Error);
}

TEST(TriVector, EvalIsAlternatingAndMultilinear) {
  const Field f = Field::prime(7);
  for_all(40, 50, [&](Rng& rng, std::size_t) {
    const TriVector t = random_trivector(f, 6, rng);
    const Vector x = rng.vector(f, 6), y = rng.vector(f, 6), z = rng.vector(f, 6), w = rng.vector(f, 6);
    EXPECT_EQ(t.eval(x, y, z), -t.eval(y, x, z));
    EXPECT_EQ(t.eval(x, y, z), -t.eval(x, z, y));
    EXPECT_TRUE(t.eval(x, x, z).is_zero());
    Vector xw(6, f.zero());
    for (std::size_t i = 0; i < 6; ++i) xw[i] = x[i] + w[i];
    EXPECT_EQ(t.eval(xw, y, z), t.eval(x, y, z) + t.eval(w, y, z));
  });
}

TEST(TriVector, EvalOnBasisGivesComponents) {
  const Field q = Field::rational();
  Rng rng(41);
  const TriVector t = random_trivector(q, 5, rng);
  auto e = [&](std::size_t i) {
    Vector v(5, q.zero());
    v[i] = q.one();
    return v;
  };
  for (const auto& c : combinations(5, 3)) EXPECT_EQ(t.eval(e(c[0]), e(c[1]), e(c[2])), t.component(c[0], c[1], c[2]));
}

TEST(TriVector, PullbackComposes) {
  const Field f = Field::prime(5);
  for_all(42, 20, [&](Rng& rng, std::size_t) {
    const TriVector t = random_trivector(f, 5, rng);
    const Matrix g = rng.matrix(f, 5, 5), h = rng.matrix(f, 5, 5);
    EXPECT_EQ(t.pullback(g).pullback(h), t.pullback(g * h));
    EXPECT_EQ(t.pullback(Matrix::identity(f, 5)), t);
  });
}

TEST(SlBasis, CoordinatesRoundTrip) {
  for (const Field f : {Field::rational(), Field::prime(7)}) {
    const SlBasis sl3(f, 3);
    ASSERT_EQ(sl3.dim(), 8u);
    Rng rng(43);
    for (int i = 0; i < 30; ++i) {
      const Vector c = rng.vector(f, 8);
      EXPECT_EQ(sl3.coordinates(sl3.matrix(c)), c);
    }
    EXPECT_THROW(sl3.coordinates(Matrix::identity(f, 3)), Error);
  }
}

TEST(Bracket, JacobiAndAdjointIsHomomorphism) {
  const Field f = Field::prime(11);
  const SlBasis sl3(f, 3);
  for_all(44, 30, [&](Rng& rng, std::size_t) {
    const Matrix x = sl3.matrix(rng.vector(f, 8)), y = sl3.matrix(rng.vector(f, 8)), z = sl3.matrix(rng.vector(f, 8));
    const Matrix jacobi = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    EXPECT_TRUE(jacobi.is_zero());
    EXPECT_EQ(sl3.adjoint(bracket(x, y)), bracket(sl3.adjoint(x), sl3.adjoint(y)));
  });
}

TEST(TraceForm, ValuesAndInvariance) {
  const Field q = Field::rational();
  const SlBasis sl3(q, 3);
  const TriVector lambda = trace_form(q);
  // Tr([E12, E23] E31) = Tr(E13 E31) = 1.
  EXPECT_EQ(lambda.component(0, 3, 4), q.one());
  // Conjugation by SL(3) preserves Tr([x, y] z).
  Rng rng(45);
  for (int i = 0; i < 10; ++i) {
    const Matrix g = rng.invertible_matrix(q, 3);
    const Matrix gi = *inverse(g);
    const Vector a = rng.vector(q, 8), b = rng.vector(q, 8), c = rng.vector(q, 8);
    auto conj = [&](const Vector& v) { return sl3.coordinates(g * sl3.matrix(v) * gi); };
    EXPECT_EQ(lambda.eval(conj(a), conj(b), conj(c)), lambda.eval(a, b, c));
  }
  EXPECT_THROW(trace_form(Field::prime(3)), Error);
}

TEST(Stabilizer, KnownDimensions) {
  const Field q = Field::rational();
  EXPECT_EQ(stabilizer_dim(trace_form(q)), 8u);
  EXPECT_EQ(stabilizer_dim(TriVector(q, 8)), 64u);
  EXPECT_EQ(stabilizer_dim(decomposable_form(q)), 48u);
  EXPECT_EQ(stabilizer_dim(kuchle_coordinate_form(q)), 8u);
  EXPECT_EQ(stabilizer_dim(trace_form(Field::prime(7))), 8u);
}

TEST(Stabilizer, InvariantUnderChangeOfBasis) {
  const Field f = Field::prime(7);
  for_all(46, 5, [&](Rng& rng, std::size_t) {
    const TriVector t = random_trivector(f, 6, rng);
    EXPECT_EQ(stabilizer_dim(t.pullback(rng.invertible_matrix(f, 6))), stabilizer_dim(t));
  });
}

TEST(Stabilizer, DecomposableOracle) {
  // e^1 ^ ... ^ e^3 on k^d: xi must preserve the span of e_4..e_d, and xi
  // restricted to e_1..e_3 must be traceless modulo it: d^2 - 3(d-3) - 1.
  const Field q = Field::rational();
  for (std::size_t d : {4u, 5u, 6u}) {
    TriVector t(q, d);
    t.set(0, 1, 2, q.one());
    EXPECT_EQ(stabilizer_dim(t), d * d - 3 * (d - 3) - 1) << d;
  }
}

TEST(Isotropy, TraceFormOnSubalgebras) {
  const Field q = Field::rational();
  const TriVector lambda = trace_form(q);
  const SlBasis sl3(q, 3);
  // Upper triangular traceless matrices: E12, E13, E23, H1, H2 form an isotropic 5-plane.
  std::vector<Vector> upper;
  for (std::size_t idx : {0u, 1u, 3u, 6u, 7u}) {
    Vector v(8, q.zero());
    v[idx] = q.one();
    upper.push_back(v);
  }
  EXPECT_TRUE(is_isotropic(lambda, Subspace::span(q, 8, upper)));
  EXPECT_FALSE(is_isotropic(lambda, Subspace::full(q, 8)));
  EXPECT_TRUE(is_isotropic(lambda, Subspace::span(q, 8, {upper[0], upper[1]})));
  EXPECT_THROW(is_isotropic(lambda, Subspace::full(q, 7)), Error);
}

TEST(InvariantForms, Sl3HasOneSpannedByTraceForm) {
  const auto [dim, form] = invariant_space_dim();
  EXPECT_EQ(dim, 1u);
  EXPECT_TRUE(proportional(form.coefficients(), trace_form(Field::rational()).coefficients()));
}

TEST(InvariantForms, Sl2IsOneDimensional) {
  // Lambda^3 of a 3-dimensional simple Lie algebra is its trivial determinant line.
  EXPECT_EQ(invariant_forms(SlBasis(Field::rational(), 2)).dim(), 1u);
  EXPECT_THROW(invariant_forms(SlBasis(Field::prime(7), 3)), Error);
}

}  // namespace
}  // namespace kuechle
