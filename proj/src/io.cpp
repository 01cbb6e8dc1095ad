#include "kuechle/io.hpp"

#include <fstream>
#include <sstream>

namespace kuechle::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t to_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Field field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field")) return Field::rational();
  const json& f = j.at("field");
  if (!f.is_string()) bad("\"field\" must be \"Q\" or \"Fp\"");
  const auto name = f.get<std::string>();
  if (name == "Q") return Field::rational();
  if (name == "Fp") {
    const json& p = require(j, "p");
    if (!p.is_number_integer() || p.get<long long>() < 2) bad("\"p\" must be an integer >= 2");
    return Field::prime(p.get<std::uint64_t>());
  }
  bad("unknown field \"" + name + "\"");
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return {{"field", "Q"}};
  return {{"field", "Fp"}, {"p", f.characteristic()}};
}

FieldElem elem_from_json(const Field& f, const json& j) {
  if (j.is_number_integer()) return f.from_mpz(mpz_class(j.dump()));
  if (j.is_string()) return f.parse(j.get<std::string>());
  bad("field element must be an integer or a string, got " + j.dump());
}

json elem_to_json(const FieldElem& x) { return x.to_string(); }

Matrix matrix_from_json(const Field& f, const json& j) {
  const json& entries = j.is_object() ? require(j, "entries") : j;
  if (!entries.is_array() || entries.empty()) bad("matrix entries must be a nonempty array of rows");
  std::vector<Vector> rows;
  for (const auto& r : entries) {
    if (!r.is_array()) bad("matrix row must be an array");
    Vector row;
    for (const auto& x : r) row.push_back(elem_from_json(f, x));
    rows.push_back(std::move(row));
  }
  Matrix m = Matrix::from_rows(f, rows);
  if (j.is_object()) {
    if (j.contains("rows") && to_index(j.at("rows"), "rows") != m.rows()) bad("\"rows\" disagrees with entries");
    if (j.contains("cols") && to_index(j.at("cols"), "cols") != m.cols()) bad("\"cols\" disagrees with entries");
  }
  return m;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(elem_to_json(x));
  return out;
}

Vector vector_from_json(const Field& f, const json& j) {
  if (!j.is_array()) bad("vector must be an array");
  Vector v;
  for (const auto& x : j) v.push_back(elem_from_json(f, x));
  return v;
}

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(vector_to_json(m.row(i)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Subspace subspace_from_json(const Field& f, const json& j) { return Subspace::span(matrix_from_json(f, j)); }

json subspace_to_json(const Subspace& u) {
  json basis = json::array();
  for (const auto& v : u.basis_vectors()) basis.push_back(vector_to_json(v));
  return {{"dim", u.dim()}, {"ambient", u.ambient_dim()}, {"basis", basis}};
}

TriVector trivector_from_json(const Field& f, const json& j) {
  const std::size_t dim = to_index(require(j, "dim"), "dim");
  if (dim < 3 || dim > 64) bad("trivector dim must be in [3, 64]");
  TriVector t(f, dim);
  const json& terms = require(j, "terms");
  if (!terms.is_array()) bad("\"terms\" must be an array");
  for (const auto& term : terms) {
    const json& ijk = require(term, "ijk");
    if (!ijk.is_array() || ijk.size() != 3) bad("\"ijk\" must hold three indices");
    std::array<std::size_t, 3> idx{};
    for (std::size_t k = 0; k < 3; ++k) {
      idx[k] = to_index(ijk[k], "ijk index");
      if (idx[k] < 1 || idx[k] > dim) bad("ijk index out of range (indices are 1-based)");
    }
    const FieldElem c = elem_from_json(f, require(term, "c"));
    t.set(idx[0] - 1, idx[1] - 1, idx[2] - 1, t.component(idx[0] - 1, idx[1] - 1, idx[2] - 1) + c);
  }
  return t;
}

json trivector_to_json(const TriVector& t) {
  json terms = json::array();
  for (const auto& [ijk, c] : t.terms()) {
    terms.push_back({{"ijk", {ijk[0] + 1, ijk[1] + 1, ijk[2] + 1}}, {"c", c.to_string()}});
  }
  json out = field_to_json(t.field());
  out["dim"] = t.dim();
  out["terms"] = terms;
  return out;
}

SkewPencil pencil_from_json(const json& j) {
  const Field f = field_from_json(j);
  return SkewPencil(matrix_from_json(f, require(j, "A")), matrix_from_json(f, require(j, "B")));
}

json point_to_json(const ProjPoint1& p) { return json::array({p.u.to_string(), p.v.to_string()}); }

json binary_form_to_json(const BinaryForm& f) { return vector_to_json(f.coeffs); }

json to_json(const SmoothnessReport& r) {
  json roots = json::array();
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    json root = {{"point", point_to_json(r.roots[i].point)}, {"multiplicity", r.roots[i].multiplicity}};
    if (i < r.kernels.size()) root["kernel"] = subspace_to_json(r.kernels[i]);
    roots.push_back(root);
  }
  json out = field_to_json(r.pencil.field());
  out["n"] = r.pencil.n();
  out["verdict"] = to_string(r.verdict);
  out["pfaffian_form"] = binary_form_to_json(r.pfaffian_form);
  out["roots"] = roots;
  out["residual_degree"] = r.residual_degree;
  if (r.failure) {
    json failure = {{"reason", to_string(r.failure->reason)}};
    if (r.failure->index) failure["index"] = *r.failure->index;
    out["failure"] = failure;
  } else {
    out["failure"] = nullptr;
  }
  return out;
}

json to_json(const StandardForm& s) {
  return {{"basis_change", matrix_to_json(s.basis_change)},
          {"a_values", vector_to_json(s.a_values)},
          {"pencil_change", matrix_to_json(s.pencil_change)}};
}

json to_json(const LagrangianEnumeration& e) {
  json out = {{"verdict", to_string(e.verdict)}, {"count", e.count}};
  if (!e.lagrangians.empty()) {
    json list = json::array();
    for (const auto& u : e.lagrangians) list.push_back(subspace_to_json(u));
    out["lagrangians"] = list;
  }
  return out;
}

json to_json(const D3Counts& c) {
  return {{"q", c.q},
          {"count_X", c.count_x},
          {"count_Z", c.count_z},
          {"count_base", c.count_base},
          {"identity_holds", c.identity_holds}};
}

json to_json(const B4LineCounts& c) {
  return {{"lines_on_quadric", c.lines_on_quadric}, {"flag_divisor_count", c.flag_divisor_count}, {"equal", c.equal}};
}

CQPoint cq_point_from_json(const json& j) {
  const Field f = field_from_json(j);
  return y_membership(matrix_from_json(f, require(j, "C")), matrix_from_json(f, require(j, "Cp")));
}

json to_json(const CQPoint& p) {
  json out = field_to_json(p.c.field());
  out["C"] = matrix_to_json(p.c)["entries"];
  out["Cp"] = matrix_to_json(p.cp)["entries"];
  out["t"] = elem_to_json(p.t);
  return out;
}

json to_json(const SubalgebraG& g) {
  json basis = json::array();
  for (const auto& x : g.basis()) basis.push_back(matrix_to_json(x)["entries"]);
  return {{"dim", g.span.dim()}, {"basis", basis}};
}

json to_json(const PhiValue& v) {
  return {{"subspace", subspace_to_json(v.subspace)}, {"plucker", vector_to_json(v.plucker)}};
}

json to_json(const YPointCount& c) {
  json unmatched = json::array();
  for (const auto& m : c.unmatched) unmatched.push_back(matrix_to_json(m)["entries"]);
  return {{"q", c.q},
          {"direct_count", c.direct_count},
          {"blowup_formula_count", c.blowup_formula_count},
          {"unmatched", unmatched}};
}

json to_json(const EmbeddingReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json entry = {{"name", c.name},       {"field", c.field},       {"orbit", c.orbit},
                  {"samples", c.samples}, {"failures", c.failures}, {"status", c.passed() ? "pass" : "fail"}};
    if (!c.passed()) entry["witness"] = c.first_failure;
    checks.push_back(entry);
  }
  return {{"passed", r.passed()}, {"checks", checks}};
}

json to_json(const ChowClass& c) { return {{"ring", c.ring().to_string()}, {"class", c.to_string()}}; }

json to_json(const SODLedger& l) {
  json entries = json::array();
  for (const auto& e : l.entries) {
    json entry = {{"component", e.component}};
    entry["count"] = e.count ? json(*e.count) : json(nullptr);
    entries.push_back(entry);
  }
  return {{"ledger", l.name}, {"entries", entries}, {"total", l.exceptional_part()}, {"symbolic", l.symbolic()}};
}

}  // namespace kuechle::io
