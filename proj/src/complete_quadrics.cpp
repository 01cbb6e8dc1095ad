#include "kuechle/complete_quadrics.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kuechle/trivectors.hpp"

namespace kuechle {

namespace {

Matrix diag3(const Field& f, int a, int b, int c) {
  Matrix m(f, 3, 3);
  m(0, 0) = f.from_int(a);
  m(1, 1) = f.from_int(b);
  m(2, 2) = f.from_int(c);
  return m;
}

std::vector<Matrix> skew_basis(const Field& f) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      Matrix x(f, 3, 3);
      x(i, j) = f.one();
      x(j, i) = -f.one();
      out.push_back(std::move(x));
    }
  }
  return out;
}

Matrix unflatten3(const Field& f, const Vector& v) {
  Matrix m(f, 3, 3);
  for (std::size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = v[i];
  return m;
}

// Symmetric matrix from (q11, q12, q13, q22, q23, q33).
Matrix symmetric_from(const Field& f, const Vector& s) {
  Matrix m(f, 3, 3);
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) m(i, j) = m(j, i) = s[k++];
  return m;
}

}  // namespace

CQPoint y_membership(const Matrix& c, const Matrix& cp) {
  if (c.rows() != 3 || c.cols() != 3 || cp.rows() != 3 || cp.cols() != 3) {
    throw Error(ErrorCode::ShapeMismatch, "complete quadric matrices must be 3x3");
  }
  if (!(c.field() == cp.field())) throw Error(ErrorCode::FieldMismatch, "C and C' over different fields");
  if (!c.is_symmetric() || !cp.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "C and C' must be symmetric");
  if (c.is_zero() || cp.is_zero()) throw Error(ErrorCode::ZeroForm, "C and C' must be nonzero");
  const Matrix prod = c * cp;
  const FieldElem t = prod(0, 0);
  if (!(prod == t * Matrix::identity(c.field(), 3))) throw Error(ErrorCode::NotOnY, "C C' is not scalar");
  return {c, cp, t};
}

const char* to_string(Orbit o) noexcept {
  switch (o) {
    case Orbit::Y0: return "Y0";
    case Orbit::Y1: return "Y1";
    case Orbit::Y2: return "Y2";
    case Orbit::Y3: return "Y3";
  }
  return "?";
}

Orbit orbit_classify(const CQPoint& p) {
  const std::size_t rc = rank(p.c), rcp = rank(p.cp);
  if (rc == 3 && proportional(p.cp, adjugate3(p.c))) return Orbit::Y0;
  if (rc == 2 && rcp == 1 && proportional(p.cp, adjugate3(p.c))) return Orbit::Y1;
  if (rc == 1 && rcp == 2 && proportional(p.c, adjugate3(p.cp))) return Orbit::Y2;
  if (rc == 1 && rcp == 1 && (p.c * p.cp).is_zero()) return Orbit::Y3;
  throw Error(ErrorCode::Unclassifiable, "rank pattern (" + std::to_string(rc) + ", " + std::to_string(rcp) + ")");
}

CQPoint orbit_representative(const Field& f, Orbit o) {
  switch (o) {
    case Orbit::Y0: return y_membership(diag3(f, 1, 1, 1), diag3(f, 1, 1, 1));
    case Orbit::Y1: return y_membership(diag3(f, 1, 1, 0), diag3(f, 0, 0, 1));
    case Orbit::Y2: return y_membership(diag3(f, 1, 0, 0), diag3(f, 0, 1, 1));
    case Orbit::Y3: return y_membership(diag3(f, 1, 0, 0), diag3(f, 0, 0, 1));
  }
  throw Error(ErrorCode::Unclassifiable, "unknown orbit");
}

CQPoint transport(const CQPoint& p, const Matrix& g) {
  const auto inv = inverse(g);
  if (!inv) throw Error(ErrorCode::DegenerateForm, "transport matrix is singular");
  return y_membership(g * p.c * g.transpose(), inv->transpose() * p.cp * *inv);
}

CQPoint sample_orbit(const Field& f, Orbit o, Rng& rng) {
  if (o == Orbit::Y0) {
    while (true) {
      const Matrix c = rng.symmetric_matrix(f, 3);
      if (!determinant(c).is_zero()) return y_membership(c, adjugate3(c));
    }
  }
  return transport(orbit_representative(f, o), rng.invertible_matrix(f, 3));
}

std::vector<Matrix> SubalgebraG::basis() const {
  std::vector<Matrix> out;
  for (const auto& v : span.basis_vectors()) out.push_back(unflatten3(span.field(), v));
  return out;
}

SubalgebraG g_subalgebra(const CQPoint& p) {
  const Field& f = p.c.field();
  std::vector<Vector> gens;
  for (const auto& x : skew_basis(f)) {
    gens.push_back(flatten(p.c * x));
    gens.push_back(flatten(x * p.cp));
  }
  SubalgebraG g{Subspace::span(f, 9, gens)};
  if (g.span.dim() != 3) {
    throw Error(ErrorCode::RankNotThree, "image of c + c' has dimension " + std::to_string(g.span.dim()));
  }
  const auto basis = g.basis();
  for (const auto& x : basis) {
    if (!x.trace().is_zero()) throw Error(ErrorCode::InvariantViolation, "g contains a matrix with nonzero trace");
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!g.span.contains(flatten(bracket(basis[i], basis[j])))) {
        throw Error(ErrorCode::InvariantViolation, "g is not closed under the bracket");
      }
    }
  }
  return g;
}

PhiValue phi(const CQPoint& p) {
  const Field& f = p.c.field();
  if (f.characteristic() == 2 || f.characteristic() == 3) {
    throw Error(ErrorCode::BadCharacteristic, "phi needs characteristic 0 or p > 3");
  }
  const SubalgebraG g = g_subalgebra(p);
  const SlBasis sl3(f, 3);
  std::vector<Vector> coords;
  for (const auto& x : g.basis()) coords.push_back(sl3.coordinates(x));
  const Subspace perp = orth_complement(Subspace::span(f, 8, coords), sl3.trace_gram());
  if (perp.dim() != 5) throw Error(ErrorCode::InvariantViolation, "g^perp does not have dimension 5");
  return {perp, plucker(perp)};
}

namespace {

// Rows: entries of x^T q + q x for each basis x; columns: q11..q33.
Matrix invariant_quadric_system(const SubalgebraG& g) {
  const Field& f = g.span.field();
  const auto basis = g.basis();
  Matrix system(f, 9 * basis.size(), 6);
  for (std::size_t col = 0; col < 6; ++col) {
    Vector unit(6, f.zero());
    unit[col] = f.one();
    const Matrix q = symmetric_from(f, unit);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Matrix r = basis[b].transpose() * q + q * basis[b];
      for (std::size_t e = 0; e < 9; ++e) system(9 * b + e, col) = r(e / 3, e % 3);
    }
  }
  return system;
}

}  // namespace

std::size_t invariant_quadric_dim(const SubalgebraG& g) { return kernel(invariant_quadric_system(g)).dim(); }

Matrix reconstruct_quadric(const SubalgebraG& g) {
  const Subspace sol = kernel(invariant_quadric_system(g));
  if (sol.dim() != 1) {
    throw Error(ErrorCode::NotUnique, "invariant quadrics form a space of dimension " + std::to_string(sol.dim()));
  }
  return symmetric_from(g.span.field(), sol.basis().row(0));
}

Matrix annihilator_element(const SubalgebraG& g, const Vector& w, bool covector) {
  const Field& f = g.span.field();
  if (w.size() != 3) throw Error(ErrorCode::BadDimension, "annihilated vector must have length 3");
  if (is_zero_vector(w)) throw Error(ErrorCode::ZeroVector, "cannot annihilate the zero vector");
  const auto basis = g.basis();
  Matrix system(f, 3, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const Vector image = covector ? basis[b].transpose() * w : basis[b] * w;
    for (std::size_t i = 0; i < 3; ++i) system(i, b) = image[i];
  }
  const Subspace sol = kernel(system);
  if (sol.dim() == 0) throw Error(ErrorCode::NoAnnihilator, "no element of g annihilates the given vector");
  Matrix xi(f, 3, 3);
  for (std::size_t b = 0; b < basis.size(); ++b) xi += sol.basis()(0, b) * basis[b];
  return xi;
}

YPointCount y_point_count(std::uint64_t q) {
  if (q != 2 && q != 3) throw Error(ErrorCode::TooLarge, "y_point_count supports q in {2, 3}");
  const Field f = Field::prime(q);
  std::vector<Matrix> sym;
  for (const auto& line : grassmannian_points(f, 6, 1)) sym.push_back(symmetric_from(f, line.basis().row(0)));

  YPointCount out;
  out.q = q;
  out.blowup_formula_count = projective_space_size(q, 5) + (q + q * q) * projective_space_size(q, 2);
  const Matrix id = Matrix::identity(f, 3);
  for (const auto& c : sym) {
    std::uint64_t fibre = 0;
    for (const auto& cp : sym) {
      const Matrix prod = c * cp;
      if (prod == prod(0, 0) * id) ++fibre;
    }
    out.direct_count += fibre;
    const std::uint64_t expected = rank(c) == 1 ? q * q + q + 1 : 1;
    if (fibre != expected) out.unmatched.push_back(c);
  }
  return out;
}

bool EmbeddingReport::passed() const noexcept {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

namespace {

constexpr std::array<Orbit, 4> kOrbits = {Orbit::Y0, Orbit::Y1, Orbit::Y2, Orbit::Y3};

class CheckSet {
 public:
  CheckSet(std::string field, std::string orbit) : field_(std::move(field)), orbit_(std::move(orbit)) {}

  void record(const std::string& name, bool ok, const std::string& witness) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, checks_.size()).first;
      checks_.push_back({name, field_, orbit_, 0, 0, ""});
    }
    EmbeddingCheck& c = checks_[it->second];
    ++c.samples;
    if (!ok) {
      if (c.failures == 0) c.first_failure = witness;
      ++c.failures;
    }
  }

  void append_to(EmbeddingReport& report) {
    for (auto& c : checks_) report.checks.push_back(std::move(c));
  }

 private:
  std::string field_;
  std::string orbit_;
  std::vector<EmbeddingCheck> checks_;
  std::map<std::string, std::size_t> index_;
};

std::string describe(const CQPoint& p) { return "C=" + p.c.to_string() + " Cp=" + p.cp.to_string(); }

// Runs the per-point checks; returns phi's Plucker vector when available.
std::optional<Vector> check_point(const CQPoint& p, Orbit expected, const TriVector& lambda, CheckSet& checks) {
  const std::string w = describe(p);
  try {
    checks.record("orbit label", orbit_classify(p) == expected, w);
  } catch (const Error& e) {
    checks.record("orbit label", false, w + ": " + e.what());
  }
  std::optional<SubalgebraG> g;
  try {
    g = g_subalgebra(p);
    checks.record("g rank 3, traceless, bracket-closed", true, w);
  } catch (const Error& e) {
    checks.record("g rank 3, traceless, bracket-closed", false, w + ": " + e.what());
    return std::nullopt;
  }
  std::optional<Vector> pl;
  try {
    const PhiValue v = phi(p);
    checks.record("phi dimension 5", true, w);
    checks.record("phi isotropic", is_isotropic(lambda, v.subspace), w);
    pl = v.plucker;
  } catch (const Error& e) {
    checks.record("phi dimension 5", false, w + ": " + e.what());
  }
  if (expected == Orbit::Y0) {
    try {
      checks.record("reconstructed quadric proportional to adj(C)", proportional(reconstruct_quadric(*g), adjugate3(p.c)), w);
    } catch (const Error& e) {
      checks.record("reconstructed quadric proportional to adj(C)", false, w + ": " + e.what());
    }
  }
  return pl;
}

void run_field(const Field& f, std::size_t samples, bool include_representatives, Rng& rng,
               EmbeddingReport& report) {
  const TriVector lambda = trace_form(f);
  for (Orbit o : kOrbits) {
    CheckSet checks(f.to_string(), to_string(o));
    std::map<Vector, Vector> phi_by_c;  // normalized C -> Plucker vector
    auto run = [&](const CQPoint& p) {
      const auto pl = check_point(p, o, lambda, checks);
      if (o == Orbit::Y0 && pl) phi_by_c.emplace(projective_normalize(flatten(p.c)), *pl);
    };
    if (include_representatives) run(orbit_representative(f, o));
    for (std::size_t i = 0; i < samples; ++i) run(sample_orbit(f, o, rng));
    if (o == Orbit::Y0 && phi_by_c.size() > 1) {
      std::set<Vector> images;
      for (const auto& [c, pl] : phi_by_c) images.insert(pl);
      checks.record("phi injective on distinct Y0 samples", images.size() == phi_by_c.size(),
                    std::to_string(phi_by_c.size()) + " distinct C, " + std::to_string(images.size()) + " phi values");
    }
    checks.append_to(report);
  }
}

}  // namespace

EmbeddingReport verify_embedding(std::size_t budget, std::uint64_t seed, std::uint64_t p) {
  EmbeddingReport report;
  if (budget == 0) return report;
  const Field fp = Field::prime(p);
  if (p <= 3) throw Error(ErrorCode::BadCharacteristic, "verify_embedding needs p > 3");
  Rng rng(seed);
  run_field(Field::rational(), std::min<std::size_t>(budget, 10), true, rng, report);
  run_field(fp, budget, false, rng, report);
  return report;
}

}  // namespace kuechle
