#pragma once

// Complete quadrics in a 3-space W: pairs (C, C') of symmetric 3x3 matrices
// with C C' scalar, their GL(W)-orbits, the Lie subalgebra g = Im(c + c'), and
// the map phi = g^perp into 5-planes of sl(3).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kuechle/linalg.hpp"
#include "kuechle/random.hpp"

namespace kuechle {

struct CQPoint {
  Matrix c;
  Matrix cp;
  FieldElem t;
};

/// Throws NotSymmetric, ZeroForm or NotOnY.
CQPoint y_membership(const Matrix& c, const Matrix& cp);

enum class Orbit { Y0, Y1, Y2, Y3 };
const char* to_string(Orbit o) noexcept;

/// Throws Unclassifiable when no rank pattern matches.
Orbit orbit_classify(const CQPoint& p);

/// y0 = (I, I), y1 = (diag(1,1,0), diag(0,0,1)), y2 = (diag(1,0,0), diag(0,1,1)),
/// y3 = (diag(1,0,0), diag(0,0,1)).
CQPoint orbit_representative(const Field& field, Orbit o);

/// g . (C, C') = (g C g^T, g^-T C' g^-1); g is transported to g x g^-1.
CQPoint transport(const CQPoint& p, const Matrix& g);

/// Uniform-ish sample on an orbit: (C, adj C) for Y0, transported
/// representatives otherwise.
CQPoint sample_orbit(const Field& field, Orbit o, Rng& rng);

/// A 3-dimensional Lie subalgebra of gl(3), canonical basis of the flattened
/// 3x3 matrices.
struct SubalgebraG {
  Subspace span;  // in k^9, row-major entries
  std::vector<Matrix> basis() const;
};

/// Span of {C x' : x' skew} and {x C' : x skew}. Throws RankNotThree, or
/// InvariantViolation if the span is not traceless or not bracket-closed.
SubalgebraG g_subalgebra(const CQPoint& p);

struct PhiValue {
  /// 5-dimensional subspace of sl(3) in the E12..E32, H1, H2 coordinates.
  Subspace subspace;
  /// 56 normalized Plucker coordinates.
  Vector plucker;
};

/// Orthogonal complement of g in sl(3) under Tr(xy). Throws BadCharacteristic
/// for p in {2, 3}.
PhiValue phi(const CQPoint& p);

/// Dimension of {q symmetric : x^T q + q x = 0 for x in g}.
std::size_t invariant_quadric_dim(const SubalgebraG& g);
/// The unique g-invariant quadric; throws NotUnique otherwise.
Matrix reconstruct_quadric(const SubalgebraG& g);

/// Nonzero x in g with x w = 0 (or w^T x = 0 for a covector). Throws
/// ZeroVector or NoAnnihilator.
Matrix annihilator_element(const SubalgebraG& g, const Vector& w, bool covector = false);

struct YPointCount {
  std::uint64_t q = 0;
  std::uint64_t direct_count = 0;
  std::uint64_t blowup_formula_count = 0;
  /// C whose fibre size differs from the blowup picture (1 off the Veronese,
  /// q^2 + q + 1 on it).
  std::vector<Matrix> unmatched;
};

/// Exhaustive count of Y(F_q) for q in {2, 3}; TooLarge otherwise.
YPointCount y_point_count(std::uint64_t q);

struct EmbeddingCheck {
  std::string name;
  std::string field;
  std::string orbit;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0; }
};

struct EmbeddingReport {
  std::vector<EmbeddingCheck> checks;
  bool passed() const noexcept;
};

/// Runs g, phi, isotropy, the quadric roundtrip on Y0 and injectivity of phi
/// on Y0 over Q (representatives plus a few integer points) and over F_p
/// (`budget` samples per orbit). Budget 0 gives an empty report.
EmbeddingReport verify_embedding(std::size_t budget, std::uint64_t seed, std::uint64_t p = 7);

}  // namespace kuechle
