// JSON-in, JSON-out bindings. Python wraps these with json.loads/json.dumps.

#include <pybind11/pybind11.h>

#include "kuechle/verify.hpp"

namespace py = pybind11;
namespace kl = kuechle;
using kl::io::json;

namespace {

kl::Field field_of(std::uint64_t p) { return p == 0 ? kl::Field::rational() : kl::Field::prime(p); }

std::string dump(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact computations with skew pencils, trivectors, complete quadrics and Chow rings";

  static py::exception<kl::Error> error(m, "KuechleError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const kl::Error& e) {
      PyErr_SetString(error.ptr(), (std::string(kl::to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("analyze_pencil", [](const std::string& pencil) {
    return dump(kl::io::to_json(kl::analyze(kl::io::pencil_from_json(kl::io::parse_json(pencil)))));
  });
  m.def("standard_form", [](const std::string& pencil) {
    return dump(kl::io::to_json(kl::standard_form(kl::io::pencil_from_json(kl::io::parse_json(pencil)))));
  });
  m.def("enumerate_split", [](std::uint64_t q, std::size_t n) {
    const auto pts = kl::projective_line_points(kl::Field::prime(q));
    if (n == 0 || n > pts.size()) throw kl::Error(kl::ErrorCode::BadDimension, "need 1 <= n <= q + 1");
    const kl::SkewPencil p = kl::split_pencil(std::vector<kl::ProjPoint1>(pts.begin(), pts.begin() + static_cast<long>(n)));
    return dump(kl::io::to_json(kl::enumerate_lagrangians(p, false)));
  });
  m.def("d3_counts", [](std::uint64_t q, std::size_t n, std::uint64_t seed) {
    kl::Rng rng(seed);
    return dump(kl::io::to_json(kl::d3_point_counts(kl::random_multilinear_form(kl::Field::prime(q), n, rng))));
  }, py::arg("q"), py::arg("n") = 4, py::arg("seed") = 0);
  m.def("stabilizer_dim", [](const std::string& form, std::uint64_t p) {
    const kl::Field f = field_of(p);
    if (form == "trace") return kl::stabilizer_dim(kl::trace_form(f));
    if (form == "kuchle") return kl::stabilizer_dim(kl::kuchle_coordinate_form(f));
    if (form == "decomposable") return kl::stabilizer_dim(kl::decomposable_form(f));
    return kl::stabilizer_dim(kl::io::trivector_from_json(f, kl::io::parse_json(form)));
  }, py::arg("form") = "trace", py::arg("p") = 0);
  m.def("classify", [](const std::string& point) {
    const kl::CQPoint y = kl::io::cq_point_from_json(kl::io::parse_json(point));
    return std::string(kl::to_string(kl::orbit_classify(y)));
  });
  m.def("phi", [](const std::string& point) {
    return dump(kl::io::to_json(kl::phi(kl::io::cq_point_from_json(kl::io::parse_json(point)))));
  });
  m.def("y_point_count", [](std::uint64_t q) { return dump(kl::io::to_json(kl::y_point_count(q))); });
  m.def("degeneracy_classes", [](const std::string& ring, const std::string& c1, const std::string& c2,
                                 const std::string& c3) {
    const kl::GradedRing r = kl::GradedRing::parse(ring);
    const auto d = kl::degeneracy_classes(kl::ChowClass::parse(r, c1), kl::ChowClass::parse(r, c2),
                                          kl::ChowClass::parse(r, c3));
    return py::make_tuple(d.discriminant.to_string(), d.corank2.to_string());
  });
  m.def("ledger", [](const std::string& name) { return dump(kl::io::to_json(kl::ledger(name))); });
  m.def("verify_all", [](std::uint64_t seed, std::size_t budget) {
    return dump(kl::to_json(kl::verify_all({seed, budget})));
  }, py::arg("seed") = 0, py::arg("budget") = 100);
}
