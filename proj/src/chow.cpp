#include "kuechle/chow.hpp"

#include <cctype>
#include <numeric>
#include <regex>

#include "kuechle/error.hpp"

namespace kuechle {

GradedRing GradedRing::projective(unsigned d) {
  if (d == 0) throw Error(ErrorCode::BadDimension, "P^0 is not supported");
  return GradedRing(Kind::projective, {d + 1});
}

GradedRing GradedRing::p1_product(unsigned n) {
  if (n == 0) throw Error(ErrorCode::BadDimension, "empty product of P^1");
  return GradedRing(Kind::p1_product, std::vector<unsigned>(n, 2));
}

GradedRing GradedRing::parse(std::string_view text) {
  auto number = [&](std::string_view s) -> unsigned {
    if (s.empty() || s.size() > 3) throw Error(ErrorCode::ParseError, "bad ring '" + std::string(text) + "'");
    unsigned v = 0;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw Error(ErrorCode::ParseError, "bad ring '" + std::string(text) + "'");
      }
      v = v * 10 + static_cast<unsigned>(ch - '0');
    }
    return v;
  };
  if (text.size() < 2 || text[0] != 'P') throw Error(ErrorCode::ParseError, "bad ring '" + std::string(text) + "'");
  const std::string_view rest = text.substr(1);
  if (const auto caret = rest.find('^'); caret != std::string_view::npos) {
    if (rest.substr(0, caret) != "1") throw Error(ErrorCode::ParseError, "only products of P1 are supported");
    return p1_product(number(rest.substr(caret + 1)));
  }
  return projective(number(rest));
}

std::string GradedRing::generator_name(std::size_t i) const {
  if (kind_ == Kind::projective) return "h";
  return "h" + std::to_string(i + 1);
}

std::string GradedRing::to_string() const {
  if (kind_ == Kind::projective) return "P" + std::to_string(bounds_[0] - 1);
  return "P1^" + std::to_string(bounds_.size());
}

// ---------------------------------------------------------------------------

ChowClass ChowClass::constant(GradedRing ring, const mpz_class& c) {
  const Exponents zero(ring.generators(), 0);
  return monomial(std::move(ring), zero, c);
}

ChowClass ChowClass::monomial(GradedRing ring, const Exponents& e, const mpz_class& c) {
  if (e.size() != ring.generators()) throw Error(ErrorCode::BadDimension, "exponent vector length");
  ChowClass out(std::move(ring));
  out.add_term(e, c);
  return out;
}

void ChowClass::add_term(const Exponents& e, const mpz_class& c) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] >= ring_.bound(i)) return;
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void ChowClass::check_ring(const ChowClass& o) const {
  if (!(ring_ == o.ring_)) {
    throw Error(ErrorCode::RingMismatch, "classes live in " + ring_.to_string() + " and " + o.ring_.to_string());
  }
}

mpz_class ChowClass::coefficient_of(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::optional<unsigned> ChowClass::degree() const {
  std::optional<unsigned> d;
  for (const auto& [e, c] : terms_) {
    const unsigned here = std::accumulate(e.begin(), e.end(), 0u);
    if (d && *d != here) return std::nullopt;
    d = here;
  }
  return d;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  a.check_ring(b);
  ChowClass out(a.ring_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

ChowClass operator*(const mpz_class& s, ChowClass a) {
  ChowClass out(a.ring_);
  for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
  return out;
}

std::string ChowClass::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, mpz_class>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    return std::accumulate(x.first.begin(), x.first.end(), 0u) < std::accumulate(y.first.begin(), y.first.end(), 0u);
  });
  std::string out;
  for (std::size_t t = 0; t < ordered.size(); ++t) {
    const auto& [e, c] = ordered[t];
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.generator_name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const mpz_class mag = abs(c);
    std::string term = (mag == 1 && !mono.empty()) ? mono : mag.get_str() + mono;
    if (t == 0) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

ChowClass ChowClass::parse(const GradedRing& ring, std::string_view text) {
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::ParseError, "bad class '" + std::string(text) + "': " + why);
  };
  // Whitespace is ignored except between two digits ("3 4" is not 34).
  static const std::regex split_token(R"([0-9]\s+[0-9])");
  if (std::regex_search(text.begin(), text.end(), split_token)) throw fail("whitespace inside a term");
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw fail("empty");

  ChowClass out(ring);
  std::size_t pos = 0;
  auto read_int = [&]() -> std::optional<mpz_class> {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return std::nullopt;
    return mpz_class(s.substr(start, pos - start));
  };

  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw fail("expected + or -");
    }
    first = false;

    mpz_class coeff = 1;
    bool have_factor = false;
    if (auto c = read_int()) {
      coeff = *c;
      have_factor = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    Exponents e(ring.generators(), 0);
    while (pos < s.size() && s[pos] == 'h') {
      ++pos;
      std::size_t gen = 0;
      if (ring.generators() > 1 || (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))) {
        const auto idx = read_int();
        if (!idx || *idx < 1 || *idx > static_cast<long>(ring.generators())) throw fail("unknown generator");
        gen = idx->get_ui() - 1;
      }
      unsigned power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const auto p = read_int();
        if (!p || *p > 1000) throw fail("bad exponent");
        power = static_cast<unsigned>(p->get_ui());
      }
      e[gen] += power;
      have_factor = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 'h') throw fail("dangling *");
      }
    }
    if (!have_factor) throw fail("empty term");
    out.add_term(e, sign * coeff);
  }
  return out;
}

DegeneracyClasses degeneracy_classes(const ChowClass& c1, const ChowClass& c2, const ChowClass& c3) {
  c1.check_ring(c2);
  c1.check_ring(c3);
  const ChowClass* cs[] = {&c1, &c2, &c3};
  for (unsigned k = 1; k <= 3; ++k) {
    const ChowClass& c = *cs[k - 1];
    if (c.is_zero()) continue;
    const auto d = c.degree();
    if (!d || *d != k) {
      throw Error(ErrorCode::DegreeMismatch, "c" + std::to_string(k) + " = " + c.to_string() + " is not of degree " +
                                                 std::to_string(k));
    }
  }
  return {mpz_class(2) * c1, mpz_class(4) * (c1 * c2 - c3)};
}

long long blowup_k0_rank(long long base_rank, long long center_rank, long long codim) {
  if (codim < 2) throw Error(ErrorCode::BadCodim, "blowup center needs codimension >= 2");
  if (base_rank < 0 || center_rank < 0) throw Error(ErrorCode::BadDimension, "ranks must be nonnegative");
  return base_rank + (codim - 1) * center_rank;
}

long long SODLedger::exceptional_part() const {
  long long total = 0;
  for (const auto& e : entries)
    if (e.count) total += *e.count;
  return total;
}

std::vector<std::string> SODLedger::symbolic() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (!e.count) out.push_back(e.component);
  return out;
}

SODLedger ledger_b9() {
  // P^4 blown up in 7 points, then one antiflip per line L_ij and one for the
  // rational normal quartic through the points.
  constexpr long long points = 7;
  constexpr long long lines = points * (points - 1) / 2;
  const long long base = 5;
  const long long after_points = blowup_k0_rank(base, points, 4);
  return {"b9",
          {{"P4", base},
           {"points", after_points - base},
           {"antiflips", lines + 1}}};
}

SODLedger ledger_d3() {
  return {"d3", {{"line bundles O(k1 h1 + ... + k4 h4), 0 <= ki <= 1", 1LL << 4}, {"D(K3)", std::nullopt}}};
}

SODLedger ledger_c7() {
  return {"c7", {{"line bundles", 3}, {"exceptional-divisor objects", 3}, {"A_X", std::nullopt}}};
}

SODLedger ledger_b4() { return {"b4", {{"line bundles", 4}, {"Clifford component", std::nullopt}}}; }

SODLedger ledger(std::string_view name) {
  if (name == "b9") return ledger_b9();
  if (name == "d3") return ledger_d3();
  if (name == "c7") return ledger_c7();
  if (name == "b4") return ledger_b4();
  throw Error(ErrorCode::ParseError, "unknown ledger '" + std::string(name) + "'");
}

}  // namespace kuechle
