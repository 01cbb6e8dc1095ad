// kuechle-lab <module> <op> [flags]
//
// Exit codes: 0 computed, 1 verification failure or broken invariant,
// 2 invalid input or usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "kuechle/verify.hpp"

namespace {

using kuechle::io::json;
namespace kl = kuechle;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// Inline JSON (starting with '{' or '[') or a path to a JSON file.
json json_arg(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return kl::io::parse_json(text);
  return kl::io::read_json_file(text);
}

kl::Field field_arg(std::uint64_t p) { return p == 0 ? kl::Field::rational() : kl::Field::prime(p); }

kl::TriVector form_arg(const std::string& form, const kl::Field& f) {
  if (form == "trace") return kl::trace_form(f);
  if (form == "kuchle") return kl::kuchle_coordinate_form(f);
  if (form == "decomposable") return kl::decomposable_form(f);
  if (form == "zero") return kl::TriVector(f, 8);
  const json j = json_arg(form);
  return kl::io::trivector_from_json(j.contains("field") ? kl::io::field_from_json(j) : f, j);
}

kl::CQPoint point_arg(const std::string& text) { return kl::io::cq_point_from_json(json_arg(text)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with skew pencils, trivectors, complete quadrics and Chow rings", "kuechle-lab"};
  app.require_subcommand(1);
  std::function<int()> action;

  // pencil
  auto* pencil = app.add_subcommand("pencil", "pencils of skew forms");
  pencil->require_subcommand(1);
  std::string pencil_input;
  auto* analyze = pencil->add_subcommand("analyze", "discriminant roots, kernels and smoothness verdict");
  analyze->add_option("--input", pencil_input, "pencil JSON file")->required();
  analyze->callback([&] {
    action = [&] {
      emit(kl::io::to_json(kl::analyze(kl::io::pencil_from_json(json_arg(pencil_input)))));
      return kOk;
    };
  });
  auto* standard = pencil->add_subcommand("standard-form", "basis change to the block standard form");
  standard->add_option("--input", pencil_input, "pencil JSON file")->required();
  standard->callback([&] {
    action = [&] {
      emit(kl::io::to_json(kl::standard_form(kl::io::pencil_from_json(json_arg(pencil_input)))));
      return kOk;
    };
  });
  std::uint64_t enum_q = 3;
  std::size_t enum_n = 2;
  bool enum_list = false;
  auto* enumerate = pencil->add_subcommand("enumerate", "count common Lagrangian subspaces over F_q");
  enumerate->add_option("--q", enum_q, "field size (prime)");
  enumerate->add_option("--n", enum_n, "half-dimension for the built-in split pencil");
  enumerate->add_option("--input", pencil_input, "pencil JSON file instead of the split pencil");
  enumerate->add_flag("--list", enum_list, "include the Lagrangians");
  enumerate->callback([&] {
    action = [&] {
      std::optional<kl::SkewPencil> p;
      if (!pencil_input.empty()) {
        p = kl::io::pencil_from_json(json_arg(pencil_input));
      } else {
        const auto pts = kl::projective_line_points(kl::Field::prime(enum_q));
        if (enum_n == 0 || enum_n > pts.size()) throw kl::Error(kl::ErrorCode::BadDimension, "need 1 <= n <= q + 1");
        p = kl::split_pencil(std::vector<kl::ProjPoint1>(pts.begin(), pts.begin() + static_cast<long>(enum_n)));
      }
      json out = kl::io::to_json(kl::enumerate_lagrangians(*p, enum_list));
      out["n"] = p->n();
      out["q"] = p->field().characteristic();
      emit(out);
      return kOk;
    };
  });

  // d3
  auto* d3 = app.add_subcommand("d3", "point counts for a multilinear section of (P^1)^n");
  d3->require_subcommand(1);
  std::uint64_t d3_q = 3, d3_seed = 0;
  std::size_t d3_n = 4;
  auto* counts = d3->add_subcommand("counts", "count X, Z and check #X = #base + q #Z");
  counts->add_option("--q", d3_q, "field size (prime)");
  counts->add_option("--seed", d3_seed, "seed for the random form");
  counts->add_option("--n", d3_n, "number of P^1 factors");
  counts->callback([&] {
    action = [&] {
      kl::Rng rng(d3_seed);
      const auto c = kl::d3_point_counts(kl::random_multilinear_form(kl::Field::prime(d3_q), d3_n, rng));
      emit(kl::io::to_json(c));
      return c.identity_holds ? kOk : kFailed;
    };
  });

  // b4
  auto* b4 = app.add_subcommand("b4", "lines on a quadric in P^5");
  b4->require_subcommand(1);
  std::uint64_t b4_q = 2;
  std::string b4_input;
  auto* lines = b4->add_subcommand("lines", "compare lines on the quadric with point-plane flags");
  lines->add_option("--q", b4_q, "field size (2 or 3)");
  lines->add_option("--input", b4_input, "symmetric 6x6 matrix JSON (default: x1x4 + x2x5 + x3x6)");
  lines->callback([&] {
    action = [&] {
      const kl::Field f = kl::Field::prime(b4_q);
      const kl::Matrix q = b4_input.empty() ? kl::hyperbolic_quadric(f) : kl::io::matrix_from_json(f, json_arg(b4_input));
      const auto c = kl::b4_line_count_check(q);
      emit(kl::io::to_json(c));
      return c.equal ? kOk : kFailed;
    };
  });

  // trivector
  auto* trivector = app.add_subcommand("trivector", "alternating 3-forms on an 8-space");
  trivector->require_subcommand(1);
  std::string form = "trace", subspace;
  std::uint64_t tri_p = 0;
  auto* stab = trivector->add_subcommand("stabilizer", "dimension of the stabilizer in gl(V)");
  stab->add_option("--form", form, "trace | kuchle | decomposable | zero | JSON");
  stab->add_option("--p", tri_p, "prime field (default Q)");
  stab->callback([&] {
    action = [&] {
      emit({{"dim", kl::stabilizer_dim(form_arg(form, field_arg(tri_p)))}});
      return kOk;
    };
  });
  auto* inv = trivector->add_subcommand("invariant-dim", "sl(3)-invariant 3-forms on sl(3) over Q");
  inv->callback([&] {
    action = [&] {
      const auto [dim, f] = kl::invariant_space_dim();
      const bool prop = kl::proportional(f.coefficients(), kl::trace_form(kl::Field::rational()).coefficients());
      emit({{"dim", dim}, {"form", kl::io::trivector_to_json(f)}, {"proportional_to_trace_form", prop}});
      return kOk;
    };
  });
  auto* iso = trivector->add_subcommand("isotropic", "does the form vanish on a subspace");
  iso->add_option("--form", form, "trace | kuchle | decomposable | zero | JSON");
  iso->add_option("--subspace", subspace, "matrix JSON whose rows span the subspace")->required();
  iso->add_option("--p", tri_p, "prime field (default Q)");
  iso->callback([&] {
    action = [&] {
      const kl::Field f = field_arg(tri_p);
      const kl::TriVector t = form_arg(form, f);
      const json sj = json_arg(subspace);
      const kl::Subspace u = kl::io::subspace_from_json(sj.is_object() && sj.contains("field") ? kl::io::field_from_json(sj) : t.field(), sj);
      emit({{"isotropic", kl::is_isotropic(t, u)}, {"dim", u.dim()}});
      return kOk;
    };
  });

  // cq
  auto* cq = app.add_subcommand("cq", "complete quadrics");
  cq->require_subcommand(1);
  std::string c_text, cp_text, point;
  std::uint64_t cq_p = 0, cq_seed = 0, cq_q = 2;
  std::size_t cq_budget = 100;
  auto* classify = cq->add_subcommand("classify", "membership and orbit of (C, C')");
  classify->add_option("--C", c_text, "symmetric 3x3 matrix JSON")->required();
  classify->add_option("--Cp", cp_text, "symmetric 3x3 matrix JSON")->required();
  classify->add_option("--p", cq_p, "prime field (default Q)");
  classify->callback([&] {
    action = [&] {
      const kl::Field f = field_arg(cq_p);
      const auto p = kl::y_membership(kl::io::matrix_from_json(f, json_arg(c_text)), kl::io::matrix_from_json(f, json_arg(cp_text)));
      json out = kl::io::to_json(p);
      out["orbit"] = kl::to_string(kl::orbit_classify(p));
      emit(out);
      return kOk;
    };
  });
  auto* g = cq->add_subcommand("g", "the subalgebra Im(c + c')");
  g->add_option("--point", point, "CQPoint JSON")->required();
  g->callback([&] {
    action = [&] {
      emit(kl::io::to_json(kl::g_subalgebra(point_arg(point))));
      return kOk;
    };
  });
  auto* phi = cq->add_subcommand("phi", "g^perp in sl(3) and its Plucker vector");
  phi->add_option("--point", point, "CQPoint JSON")->required();
  phi->callback([&] {
    action = [&] {
      const auto p = point_arg(point);
      const auto v = kl::phi(p);
      json out = kl::io::to_json(v);
      out["isotropic"] = kl::is_isotropic(kl::trace_form(p.c.field()), v.subspace);
      emit(out);
      return kOk;
    };
  });
  auto* cq_verify = cq->add_subcommand("verify", "sampled checks of g and phi on every orbit");
  cq_verify->add_option("--budget", cq_budget, "samples per orbit over F_p");
  cq_verify->add_option("--seed", cq_seed, "seed");
  cq_verify->add_option("--p", cq_p, "prime > 3 (default 7)");
  cq_verify->callback([&] {
    action = [&] {
      const auto r = kl::verify_embedding(cq_budget, cq_seed, cq_p == 0 ? 7 : cq_p);
      emit(kl::io::to_json(r));
      return r.passed() ? kOk : kFailed;
    };
  });
  auto* count = cq->add_subcommand("count", "points of Y over F_q");
  count->add_option("--q", cq_q, "2 or 3");
  count->callback([&] {
    action = [&] {
      const auto c = kl::y_point_count(cq_q);
      emit(kl::io::to_json(c));
      return c.direct_count == c.blowup_formula_count ? kOk : kFailed;
    };
  });

  // chow
  auto* chow = app.add_subcommand("chow", "Chow ring arithmetic and exceptional ledgers");
  chow->require_subcommand(1);
  std::string c1 = "0", c2 = "0", c3 = "0", ring = "P3", ledger_name;
  auto* degeneracy = chow->add_subcommand("degeneracy", "classes 2c1 and 4(c1 c2 - c3)");
  degeneracy->add_option("--c1", c1);
  degeneracy->add_option("--c2", c2);
  degeneracy->add_option("--c3", c3);
  degeneracy->add_option("--ring", ring, "P<d> or P1^<n>");
  degeneracy->callback([&] {
    action = [&] {
      const auto r = kl::GradedRing::parse(ring);
      const auto d = kl::degeneracy_classes(kl::ChowClass::parse(r, c1), kl::ChowClass::parse(r, c2),
                                            kl::ChowClass::parse(r, c3));
      emit({{"ring", r.to_string()}, {"discriminant", d.discriminant.to_string()}, {"corank2", d.corank2.to_string()}});
      return kOk;
    };
  });
  auto* ledger = chow->add_subcommand("ledger", "exceptional objects in a semiorthogonal decomposition");
  ledger->add_option("name", ledger_name, "b9 | d3 | c7 | b4")->required();
  ledger->callback([&] {
    action = [&] {
      emit(kl::io::to_json(kl::ledger(ledger_name)));
      return kOk;
    };
  });

  // verify-all
  kl::RunConfig config;
  std::string output;
  auto* verify_all = app.add_subcommand("verify-all", "run every registered check");
  verify_all->add_option("--seed", config.seed, "seed");
  verify_all->add_option("--budget", config.budget, "sample budget");
  verify_all->add_option("--output", output, "write the report here instead of standard output");
  verify_all->callback([&] {
    action = [&] {
      const auto report = kl::verify_all(config);
      const std::string text = kl::to_json(report).dump(2) + "\n";
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw kl::Error(kl::ErrorCode::ParseError, "cannot write " + output);
        out << text;
        for (const auto& c : report.checks) std::cout << (c.passed ? "pass  " : "FAIL  ") << c.name << "\n";
      }
      return report.passed() ? kOk : kFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }

  try {
    return action ? action() : kBadInput;
  } catch (const kl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kl::is_input_error(e.code()) ? kBadInput : kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
