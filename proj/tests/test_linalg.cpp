#include <gtest/gtest.h>

#include "kuechle/linalg.hpp"
#include "support.hpp"

namespace kuechle {
namespace {

using testing::for_all;

TEST(Determinant, MatchesLeibnizExpansion) {
  for (const Field f : {Field::rational(), Field::prime(7)}) {
    for_all(10, 60, [&](Rng& rng, std::size_t) {
      const std::size_t m = 1 + rng.below(5);
      const Matrix a = rng.matrix(f, m, m, 3);
      EXPECT_EQ(determinant(a), testing::leibniz_det(a));
    });
  }
}

TEST(Inverse, ProductIsIdentity) {
  const Field f = Field::rational();
  for_all(11, 50, [&](Rng& rng, std::size_t) {
    const Matrix g = rng.invertible_matrix(f, 4);
    const auto inv = inverse(g);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(g * *inv, Matrix::identity(f, 4));
  });
  EXPECT_FALSE(inverse(Matrix(f, 3, 3)).has_value());
}

TEST(Kernel, RankNullityAndAnnihilation) {
  for (const Field f : {Field::rational(), Field::prime(3)}) {
    for_all(12, 80, [&](Rng& rng, std::size_t) {
      const std::size_t r = 1 + rng.below(5), c = 1 + rng.below(6);
      const Matrix a = rng.matrix(f, r, c, 2);
      const Subspace k = kernel(a);
      EXPECT_EQ(k.dim() + rank(a), c);
      for (const auto& v : k.basis_vectors()) EXPECT_TRUE(is_zero_vector(a * v));
    });
  }
}

TEST(Subspace, IntersectionAndSumDimensions) {
  const Field f = Field::prime(5);
  for_all(13, 80, [&](Rng& rng, std::size_t) {
    const Subspace u = Subspace::span(rng.matrix(f, 1 + rng.below(4), 6));
    const Subspace w = Subspace::span(rng.matrix(f, 1 + rng.below(4), 6));
    const Subspace s = subspace_sum(u, w), i = subspace_intersect(u, w);
    EXPECT_EQ(s.dim() + i.dim(), u.dim() + w.dim());
    EXPECT_TRUE(u.contains(i));
    EXPECT_TRUE(w.contains(i));
    EXPECT_TRUE(s.contains(u));
    EXPECT_TRUE(s.contains(w));
  });
}

TEST(Subspace, CanonicalFormIgnoresSpanningSet) {
  const Field f = Field::rational();
  for_all(14, 40, [&](Rng& rng, std::size_t) {
    const Matrix rows = rng.matrix(f, 3, 5);
    const Matrix mixed = rng.invertible_matrix(f, 3) * rows;
    EXPECT_EQ(Subspace::span(rows), Subspace::span(mixed));
  });
}

TEST(OrthComplement, DimensionAndPairing) {
  const Field f = Field::prime(7);
  for_all(15, 40, [&](Rng& rng, std::size_t) {
    const Matrix b = rng.invertible_matrix(f, 5);
    const Subspace u = Subspace::span(rng.matrix(f, 2, 5));
    const Subspace perp = orth_complement(u, b);
    EXPECT_EQ(perp.dim(), 5 - u.dim());
    for (const auto& x : perp.basis_vectors())
      for (const auto& y : u.basis_vectors()) EXPECT_TRUE(bilinear(x, b, y).is_zero());
  });
  EXPECT_THROW(orth_complement(Subspace::full(f, 2), Matrix(f, 2, 2)), Error);
}

TEST(Pfaffian, SquareIsDeterminant) {
  for (const Field f : {Field::rational(), Field::prime(101)}) {
    for_all(16, 60, [&](Rng& rng, std::size_t) {
      const Matrix a = rng.skew_matrix(f, 2 + rng.below(7), 4);
      const FieldElem pf = pfaffian(a);
      EXPECT_EQ(pf * pf, determinant(a));
    });
  }
}

TEST(Pfaffian, MatchesPermutationDefinition) {
  const Field q = Field::rational();
  for_all(17, 20, [&](Rng& rng, std::size_t) {
    const Matrix a = rng.skew_matrix(q, 2 * (1 + rng.below(3)), 5);
    EXPECT_EQ(pfaffian(a), testing::permutation_pfaffian(a));
  });
}

TEST(Pfaffian, CongruenceScalesByDeterminant) {
  const Field f = Field::prime(101);
  for_all(18, 40, [&](Rng& rng, std::size_t) {
    const Matrix a = rng.skew_matrix(f, 6);
    const Matrix p = rng.matrix(f, 6, 6);
    EXPECT_EQ(pfaffian(p.transpose() * a * p), determinant(p) * pfaffian(a));
  });
}

TEST(Pfaffian, Conventions) {
  const Field q = Field::rational();
  EXPECT_EQ(pfaffian(Matrix::from_ints(q, {{0, 1}, {-1, 0}})), q.one());
  EXPECT_TRUE(pfaffian(Matrix(q, 3, 3)).is_zero());
  EXPECT_THROW(pfaffian(Matrix::from_ints(q, {{0, 1}, {1, 0}})), Error);
  // Characteristic 2: symmetric with zero diagonal is skew, nonzero diagonal is not.
  const Field f2 = Field::prime(2);
  EXPECT_TRUE(is_skew(Matrix::from_ints(f2, {{0, 1}, {1, 0}})));
  EXPECT_FALSE(is_skew(Matrix::from_ints(f2, {{1, 1}, {1, 0}})));
}

TEST(Adjugate, TimesMatrixIsDeterminant) {
  for (const Field f : {Field::rational(), Field::prime(7)}) {
    for_all(19, 50, [&](Rng& rng, std::size_t) {
      const Matrix c = rng.matrix(f, 3, 3);
      EXPECT_EQ(adjugate3(c) * c, determinant(c) * Matrix::identity(f, 3));
    });
  }
}

TEST(Plucker, InvariantUnderBasisChangeAndMultilinear) {
  const Field f = Field::prime(7);
  for_all(20, 40, [&](Rng& rng, std::size_t) {
    const Matrix rows = rng.matrix(f, 3, 6);
    if (rank(rows) < 3) return;
    const Matrix g = rng.invertible_matrix(f, 3);
    const Vector p = plucker_minors(rows), pg = plucker_minors(g * rows);
    // Minors scale by det(g).
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(pg[i], determinant(g) * p[i]);
    // Linear in the first row.
    Matrix r1 = rows, r2 = rows, sum = rows;
    const Vector extra = rng.vector(f, 6);
    for (std::size_t j = 0; j < 6; ++j) {
      r2(0, j) = extra[j];
      sum(0, j) = rows(0, j) + extra[j];
    }
    const Vector a = plucker_minors(r1), b = plucker_minors(r2), s = plucker_minors(sum);
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s[i], a[i] + b[i]);
  });
}

TEST(Plucker, DistinguishesSubspaces) {
  const Field f = Field::prime(3);
  const auto planes = grassmannian_points(f, 4, 2);
  std::set<Vector> seen;
  for (const auto& u : planes) seen.insert(plucker(u));
  EXPECT_EQ(seen.size(), planes.size());
}

TEST(Grassmannian, CountMatchesGaussianBinomial) {
  for (std::uint64_t q : {2u, 3u}) {
    for (std::size_t m = 1; m <= 5; ++m) {
      for (std::size_t r = 0; r <= m; ++r) {
        EXPECT_EQ(grassmannian_points(Field::prime(q), m, r).size(), gaussian_binomial(q, m, r))
            << "q=" << q << " m=" << m << " r=" << r;
      }
    }
  }
  EXPECT_EQ(gaussian_binomial(2, 4, 2), 35u);
  EXPECT_EQ(projective_space_size(3, 5), 364u);
  EXPECT_THROW(grassmannian_points(Field::prime(5), 8, 4, 1000), Error);
}

TEST(Combinations, LexicographicOrder) {
  const auto c = combinations(4, 2);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(c.front(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(c.back(), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(combinations(8, 3).size(), 56u);
}

}  // namespace
}  // namespace kuechle
