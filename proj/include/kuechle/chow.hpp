#pragma once

// Truncated graded rings for Chow rings of P^d and (P^1)^n, the two
// degeneracy-class formulas, and exceptional-object ledgers.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kuechle {

class GradedRing {
 public:
  /// Z[h]/(h^{d+1}).
  static GradedRing projective(unsigned d);
  /// Z[h1..hn]/(h_i^2).
  static GradedRing p1_product(unsigned n);
  /// "P3" or "P1^2" (also "P1" for n = 1). Throws ParseError.
  static GradedRing parse(std::string_view text);

  std::size_t generators() const noexcept { return bounds_.size(); }
  /// Exponent of generator i must stay below bound(i).
  unsigned bound(std::size_t i) const { return bounds_.at(i); }
  std::string generator_name(std::size_t i) const;
  std::string to_string() const;

  friend bool operator==(const GradedRing& a, const GradedRing& b) = default;

 private:
  enum class Kind { projective, p1_product };
  GradedRing(Kind kind, std::vector<unsigned> bounds) : kind_(kind), bounds_(std::move(bounds)) {}
  Kind kind_;
  std::vector<unsigned> bounds_;
};

using Exponents = std::vector<unsigned>;

class ChowClass {
 public:
  explicit ChowClass(GradedRing ring) : ring_(std::move(ring)) {}
  static ChowClass constant(GradedRing ring, const mpz_class& c);
  /// The monomial prod g_i^{e_i}; zero if some exponent reaches its bound.
  static ChowClass monomial(GradedRing ring, const Exponents& e, const mpz_class& c = 1);
  /// Integer combination of monomials, e.g. "6h^2", "h1*h2 - 2h3", "4". Throws
  /// ParseError.
  static ChowClass parse(const GradedRing& ring, std::string_view text);

  const GradedRing& ring() const noexcept { return ring_; }
  const std::map<Exponents, mpz_class>& terms() const noexcept { return terms_; }
  mpz_class coefficient_of(const Exponents& e) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Degree when homogeneous and nonzero.
  std::optional<unsigned> degree() const;

  ChowClass& operator+=(const ChowClass& o);
  ChowClass& operator-=(const ChowClass& o);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  /// Throws RingMismatch.
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const mpz_class& s, ChowClass a);
  friend bool operator==(const ChowClass& a, const ChowClass& b) = default;

  /// Lowest degree first, e.g. "8h", "80h^3", "2h1*h2", "0".
  std::string to_string() const;

  /// Throws RingMismatch unless both classes share a ring.
  void check_ring(const ChowClass& o) const;

 private:
  void add_term(const Exponents& e, const mpz_class& c);

  GradedRing ring_;
  std::map<Exponents, mpz_class> terms_;
};

struct DegeneracyClasses {
  ChowClass discriminant;
  ChowClass corank2;
};

/// (2 c1, 4 (c1 c2 - c3)). Each c_k must be zero or homogeneous of degree k
/// (DegreeMismatch); all in one ring (RingMismatch).
DegeneracyClasses degeneracy_classes(const ChowClass& c1, const ChowClass& c2, const ChowClass& c3);

/// Rank of K_0 after blowing up a center of codimension `codim`:
/// base + (codim - 1) * center. Throws BadCodim for codim < 2.
long long blowup_k0_rank(long long base_rank, long long center_rank, long long codim);

struct LedgerEntry {
  std::string component;
  /// Number of exceptional objects; nullopt for a categorical component.
  std::optional<long long> count;
};

struct SODLedger {
  std::string name;
  std::vector<LedgerEntry> entries;

  /// Sum of the integer entries.
  long long exceptional_part() const;
  std::vector<std::string> symbolic() const;
};

SODLedger ledger_b9();
SODLedger ledger_d3();
SODLedger ledger_c7();
SODLedger ledger_b4();
/// "b9", "d3", "c7" or "b4"; throws ParseError otherwise.
SODLedger ledger(std::string_view name);

}  // namespace kuechle
