#pragma once

// Exact scalars: the rationals and prime fields F_p, plus binary forms over
// them and root extraction on P^1.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "kuechle/error.hpp"

namespace kuechle {

class FieldElem;

/// Q or F_p. Every computation runs inside a single field; mixing fields throws
/// FieldMismatch.
class Field {
 public:
  enum class Kind { rational, prime };

  Field() = default;  // Q
  static Field rational() noexcept { return Field(); }
  /// Throws NotPrime unless 2 <= p < 2^31 is prime.
  static Field prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::rational; }
  bool is_prime() const noexcept { return kind_ == Kind::prime; }
  /// 0 for Q.
  std::uint32_t characteristic() const noexcept { return p_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long long v) const;
  FieldElem from_mpz(const mpz_class& v) const;
  /// Decimal integer or "a/b".
  FieldElem parse(std::string_view text) const;
  /// All elements of F_p in residue order. Throws BadCharacteristic over Q.
  std::vector<FieldElem> elements() const;

  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::rational;
  std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint64_t n) noexcept;

class FieldElem {
 public:
  /// Rational zero.
  FieldElem() = default;

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Throws DivisionByZero.
  FieldElem inverse() const;

  /// Residue in [0, p). Only valid over F_p.
  std::uint64_t residue() const;
  /// Reduced fraction. Only valid over Q.
  const mpq_class& rational_value() const;

  /// Canonical text: "a/b" in lowest terms or an integer; residue over F_p.
  std::string to_string() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  /// Total order inside one field (residue order over F_p, numeric over Q).
  friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b);

 private:
  friend class Field;
  FieldElem(Field f, std::uint64_t residue) : field_(f), value_(residue) {}
  FieldElem(mpq_class q) : value_(std::move(q)) {}

  void check_same_field(const FieldElem& o) const;
  std::uint64_t p() const noexcept { return field_.characteristic(); }

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_ = mpq_class(0);
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

/// Homogeneous binary form of degree n; coeffs[i] multiplies u^(n-i) v^i.
struct BinaryForm {
  Field field;
  std::vector<FieldElem> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const noexcept;
  FieldElem evaluate(const FieldElem& u, const FieldElem& v) const;
};

/// A point (u:v) of P^1 with the first nonzero coordinate equal to 1.
struct ProjPoint1 {
  FieldElem u;
  FieldElem v;

  bool operator==(const ProjPoint1&) const = default;
};

/// Throws ZeroVector if u = v = 0.
ProjPoint1 normalize_point(const FieldElem& u, const FieldElem& v);

/// All points of P^1(F_p): (1:0) first, then (a:1) for a = 0..p-1.
std::vector<ProjPoint1> projective_line_points(const Field& field);

struct RootMultiplicity {
  ProjPoint1 point;
  int multiplicity = 0;
};

struct BinaryFormRoots {
  std::vector<RootMultiplicity> roots;
  /// Degree of the factor left after removing every root over the base field;
  /// 0 means the form splits into linear factors.
  int residual_degree = 0;

  bool splits() const noexcept { return residual_degree == 0; }
  int total_multiplicity() const noexcept;
};

/// Roots of a nonzero binary form, with multiplicities from repeated synthetic
/// division. Over F_p every point of P^1(F_p) is tried; over Q the rational
/// root test runs on the affine chart v = 1 after splitting off v-factors.
/// Throws ZeroForm on the zero form.
BinaryFormRoots binary_form_roots(const BinaryForm& f);

/// Dense univariate polynomial, coefficient i multiplies t^i. Used as the
/// coefficient ring when a Pfaffian is expanded symbolically.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldElem c);
  static Poly linear(const FieldElem& c0, const FieldElem& c1);

  const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
  FieldElem coeff(std::size_t i, const Field& field) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

 private:
  void trim();
  std::vector<FieldElem> coeffs_;
};

}  // namespace kuechle
