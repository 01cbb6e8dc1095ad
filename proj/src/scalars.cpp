#include "kuechle/scalars.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace kuechle {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view text) {
  std::string s(trim(text));
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const std::size_t digits_from = (!s.empty() && s.front() == '-') ? 1 : 0;
  if (s.size() == digits_from ||
      !std::all_of(s.begin() + static_cast<long>(digits_from), s.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return mpz_class(s, 10);
}

}  // namespace

bool is_prime_number(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime_number(p)) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a supported prime");
  }
  return Field(Kind::prime, static_cast<std::uint32_t>(p));
}

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(long long v) const {
  if (is_rational()) return FieldElem(mpq_class(static_cast<long>(v)));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return FieldElem(*this, static_cast<std::uint64_t>(r));
}

FieldElem Field::from_mpz(const mpz_class& v) const {
  if (is_rational()) return FieldElem(mpq_class(v));
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return FieldElem(*this, r.get_ui());
}

FieldElem Field::parse(std::string_view text) const {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return from_mpz(parse_integer(t));
  const mpz_class num = parse_integer(t.substr(0, slash));
  const mpz_class den = parse_integer(t.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  const FieldElem d = from_mpz(den);
  if (d.is_zero()) throw Error(ErrorCode::ParseError, "denominator vanishes in " + to_string());
  return from_mpz(num) / d;
}

std::vector<FieldElem> Field::elements() const {
  if (is_rational()) throw Error(ErrorCode::BadCharacteristic, "Q has no finite element list");
  std::vector<FieldElem> out;
  out.reserve(p_);
  for (std::uint64_t r = 0; r < p_; ++r) out.push_back(FieldElem(*this, r));
  return out;
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

// ---------------------------------------------------------------------------

bool FieldElem::is_zero() const noexcept {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool FieldElem::is_one() const noexcept {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

void FieldElem::check_same_field(const FieldElem& o) const {
  if (field_ != o.field_) {
    throw Error(ErrorCode::FieldMismatch, field_.to_string() + " vs " + o.field_.to_string());
  }
}

std::uint64_t FieldElem::residue() const {
  if (!field_.is_prime()) throw Error(ErrorCode::FieldMismatch, "residue() on a rational");
  return std::get<std::uint64_t>(value_);
}

const mpq_class& FieldElem::rational_value() const {
  if (!field_.is_rational()) throw Error(ErrorCode::FieldMismatch, "rational_value() over F_p");
  return std::get<mpq_class>(value_);
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (field_.is_rational()) return FieldElem(mpq_class(1) / std::get<mpq_class>(value_));
  return FieldElem(field_, mod_pow(std::get<std::uint64_t>(value_), p() - 2, p()));
}

std::string FieldElem::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

FieldElem FieldElem::operator-() const {
  if (field_.is_rational()) return FieldElem(mpq_class(-std::get<mpq_class>(value_)));
  const auto r = std::get<std::uint64_t>(value_);
  return FieldElem(field_, r == 0 ? 0 : p() - r);
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + std::get<std::uint64_t>(o.value_)) % p();
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + p() - std::get<std::uint64_t>(o.value_)) % p();
  }
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = r * std::get<std::uint64_t>(o.value_) % p();
  }
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.field_ != b.field_) return false;
  if (a.field_.is_rational()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
}

std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) {
  a.check_same_field(b);
  if (a.field_.is_rational()) {
    const int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return std::get<std::uint64_t>(a.value_) <=> std::get<std::uint64_t>(b.value_);
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------

bool BinaryForm::is_zero() const noexcept {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const FieldElem& c) { return c.is_zero(); });
}

FieldElem BinaryForm::evaluate(const FieldElem& u, const FieldElem& v) const {
  const int n = degree();
  FieldElem acc = field.zero();
  for (int i = 0; i <= n; ++i) {
    FieldElem term = coeffs[static_cast<std::size_t>(i)];
    for (int k = 0; k < n - i; ++k) term *= u;
    for (int k = 0; k < i; ++k) term *= v;
    acc += term;
  }
  return acc;
}

ProjPoint1 normalize_point(const FieldElem& u, const FieldElem& v) {
  if (u.field() != v.field()) throw Error(ErrorCode::FieldMismatch, "point coordinates");
  if (!u.is_zero()) return {u.field().one(), v / u};
  if (!v.is_zero()) return {u.field().zero(), u.field().one()};
  throw Error(ErrorCode::ZeroVector, "(0:0) is not a point of P^1");
}

std::vector<ProjPoint1> projective_line_points(const Field& field) {
  std::vector<ProjPoint1> out;
  out.push_back({field.zero(), field.one()});
  for (const auto& b : field.elements()) out.push_back({field.one(), b});
  return out;
}

int BinaryFormRoots::total_multiplicity() const noexcept {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

namespace {

// h(v) = sum c_i v^i, divided by (v - b): the chart u = 1 of dividing the
// binary form by the linear form (v - b u). Returns false on nonzero remainder.
bool divide_by_root(std::vector<FieldElem>& c, const FieldElem& b) {
  const std::size_t n = c.size() - 1;
  std::vector<FieldElem> q(n);
  FieldElem carry = c[n];
  for (std::size_t k = n; k-- > 0;) {
    q[k] = carry;
    carry = c[k] + b * carry;
  }
  if (!carry.is_zero()) return false;
  c = std::move(q);
  return true;
}

FieldElem eval_ascending(const std::vector<FieldElem>& c, const FieldElem& x) {
  FieldElem acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * x + c[k];
  return acc;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  if (n > mpz_class("1000000000000000")) {
    throw Error(ErrorCode::TooLarge, "rational root search on a coefficient above 1e15");
  }
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Candidate rational roots of sum c_i v^i (c_0, c_n nonzero).
std::vector<mpq_class> rational_root_candidates(const std::vector<FieldElem>& c) {
  mpz_class lcm = 1;
  for (const auto& x : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.rational_value().get_den_mpz_t());
  const mpz_class constant = mpz_class(c.front().rational_value() * lcm);
  const mpz_class leading = mpz_class(c.back().rational_value() * lcm);
  std::set<mpq_class> out;
  for (const auto& d : positive_divisors(constant)) {
    for (const auto& e : positive_divisors(leading)) {
      mpq_class r(d, e);
      r.canonicalize();
      out.insert(r);
      out.insert(-r);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

BinaryFormRoots binary_form_roots(const BinaryForm& f) {
  if (f.coeffs.empty() || f.is_zero()) throw Error(ErrorCode::ZeroForm, "binary form is identically zero");
  const Field& k = f.field;
  std::vector<FieldElem> c = f.coeffs;
  BinaryFormRoots out;

  // (0:1) <-> factor u <-> vanishing top coefficient.
  int mult = 0;
  while (c.back().is_zero()) {
    c.pop_back();
    ++mult;
  }
  if (mult > 0) out.roots.push_back({{k.zero(), k.one()}, mult});

  // (1:0) <-> factor v <-> vanishing constant coefficient in the chart u = 1.
  mult = 0;
  while (c.front().is_zero()) {
    c.erase(c.begin());
    ++mult;
  }
  if (mult > 0) out.roots.push_back({{k.one(), k.zero()}, mult});

  std::vector<FieldElem> candidates;
  if (k.is_prime()) {
    for (auto& b : k.elements()) {
      if (!b.is_zero()) candidates.push_back(std::move(b));
    }
  } else if (c.size() > 1) {
    for (const auto& r : rational_root_candidates(c)) {
      candidates.push_back(k.from_mpz(r.get_num()) / k.from_mpz(r.get_den()));
    }
  }

  for (const auto& b : candidates) {
    if (c.size() <= 1) break;
    mult = 0;
    while (c.size() > 1 && eval_ascending(c, b).is_zero() && divide_by_root(c, b)) ++mult;
    if (mult > 0) out.roots.push_back({{k.one(), b}, mult});
  }
  out.residual_degree = static_cast<int>(c.size()) - 1;

  std::sort(out.roots.begin(), out.roots.end(), [](const RootMultiplicity& a, const RootMultiplicity& b) {
    if (a.point.u != b.point.u) return a.point.u < b.point.u;
    return a.point.v < b.point.v;
  });
  return out;
}

// ---------------------------------------------------------------------------

Poly::Poly(FieldElem c) {
  coeffs_.push_back(std::move(c));
  trim();
}

Poly Poly::linear(const FieldElem& c0, const FieldElem& c1) {
  Poly p;
  p.coeffs_ = {c0, c1};
  p.trim();
  return p;
}

FieldElem Poly::coeff(std::size_t i, const Field& field) const {
  return i < coeffs_.size() ? coeffs_[i] : field.zero();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) {
    const Field f = o.coeffs_.front().field();
    coeffs_.resize(o.coeffs_.size(), f.zero());
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  const Field f = a.coeffs_.front().field();
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

}  // namespace kuechle
