#include "brlie/runner.hpp"

#include <filesystem>
#include <ostream>

#include "brlie/enveloping.hpp"

namespace brlie {

namespace {

bool all_passed(const std::vector<CheckReport>& rs) {
  for (const auto& r : rs)
    if (!r.passed) return false;
  return true;
}

void emit_reports(const RunConfig& cfg, const std::vector<CheckReport>& rs, std::ostream& out) {
  if (!cfg.report_path.empty()) write_json_file(cfg.report_path, reports_to_json(rs));
  if (cfg.human) out << render_human(rs);
  else out << json_bytes(reports_to_json(rs));
}

int run_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw FormatError("check: expected exactly one bundle file");
  BundleFile bundle = bundle_from_json(load_json_file(cfg.inputs[0]), cfg.conductor);
  std::vector<std::string> axioms = cfg.axioms;
  if (axioms.empty()) axioms = {"L1", "L2", "CL1", "CL2", "LB"};
  for (const auto& a : axioms)
    if (!has_axiom(a)) throw FormatError("unknown axiom id: " + a);
  std::vector<CheckReport> reports = check_all(bundle.env(), axioms);
  emit_reports(cfg, reports, out);
  return all_passed(reports) ? 0 : 1;
}

int run_construct(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 3)
    throw FormatError("construct: expected --a a.json --h h.json --maps maps.json");
  BundleFile fa = bundle_from_json(load_json_file(cfg.inputs[0]), cfg.conductor);
  BundleFile fh = bundle_from_json(load_json_file(cfg.inputs[1]), cfg.conductor);

  DoubleBicrosssumSpec spec;
  spec.a = fa.principal();
  spec.a.object.name = "A";
  spec.a = BraidedLieBialgebra{spec.a.object,
                               Morphism::make({spec.a.object, spec.a.object}, {spec.a.object},
                                              fa.principal().bracket.entries()),
                               Morphism::make({spec.a.object}, {spec.a.object, spec.a.object},
                                              fa.principal().cobracket.entries())};
  spec.h = fh.principal();
  spec.variant = variant_from_string(cfg.variant.empty() ? "double_bicrosssum" : cfg.variant);

  std::map<std::string, GradedObject> pair_objects{{"A", spec.a.object}, {"H", spec.h.object}};
  Json maps = load_json_file(cfg.inputs[2]);
  const long conductor =
      lcm_long(lcm_long(fa.conductor, fh.conductor), cfg.conductor > 0 ? cfg.conductor : 1);
  spec.actions = ActionData::zero(spec.a.object, spec.h.object);
  if (maps.contains("alpha") && !maps.at("alpha").is_null())
    spec.actions.alpha = morphism_from_json(maps.at("alpha"), pair_objects, conductor);
  if (maps.contains("beta") && !maps.at("beta").is_null())
    spec.actions.beta = morphism_from_json(maps.at("beta"), pair_objects, conductor);
  if (maps.contains("phi") && !maps.at("phi").is_null())
    spec.actions.phi = morphism_from_json(maps.at("phi"), pair_objects, conductor);
  if (maps.contains("psi") && !maps.at("psi").is_null())
    spec.actions.psi = morphism_from_json(maps.at("psi"), pair_objects, conductor);

  DoubleBicrosssum built = build_double_bicrosssum(spec);
  TheoremReport theorem = verify_main_theorem(spec);

  BundleFile out_bundle = bundle_of_bialgebra(built.d);
  if (!cfg.out_path.empty()) write_json_file(cfg.out_path, bundle_to_json(out_bundle));
  Json report = theorem_report_to_json(theorem);
  if (!cfg.report_path.empty()) write_json_file(cfg.report_path, report);
  out << json_bytes(report);
  return theorem.theorem_instance_verified ? 0 : 1;
}

int run_qdouble(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw FormatError("qdouble: expected one bundle file");
  BundleFile fh = bundle_from_json(load_json_file(cfg.inputs[0]), cfg.conductor);
  const DoubleVariant variant = (cfg.variant == "op") ? DoubleVariant::OpVariant
                                                      : DoubleVariant::CopVariant;
  if (!cfg.variant.empty() && cfg.variant != "op" && cfg.variant != "cop")
    throw FormatError("qdouble: variant must be op or cop");
  QuantumDouble qd = quantum_double(fh.principal(), variant);

  std::vector<CheckReport> rchecks = check_rmatrix(qd.dbl.d, qd.r_matrix, {"COB", "CYBE"});
  Json report{{"variant", cfg.variant.empty() ? "cop" : cfg.variant},
              {"dim", qd.dbl.d.object.dim()},
              {"theorem", theorem_report_to_json(qd.theorem)},
              {"rmatrix_checks", reports_to_json(rchecks)}};
  if (!cfg.out_path.empty()) {
    BundleFile out_bundle = bundle_of_bialgebra(qd.dbl.d);
    out_bundle.generators.emplace("R", qd.r_matrix.element);
    write_json_file(cfg.out_path, bundle_to_json(out_bundle));
  }
  if (!cfg.report_path.empty()) write_json_file(cfg.report_path, report);
  out << json_bytes(report);
  return (qd.theorem.theorem_instance_verified && all_passed(rchecks)) ? 0 : 1;
}

int run_cybe(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 2)
    throw FormatError("cybe: expected a bundle file and an R/r morphism file");
  BundleFile fh = bundle_from_json(load_json_file(cfg.inputs[0]), cfg.conductor);
  BraidedLieBialgebra h = fh.principal();
  Json mj = load_json_file(cfg.inputs[1]);

  std::vector<CheckReport> reports;
  if (mj.contains("rmatrix")) {
    RMatrix r{morphism_from_json(mj.at("rmatrix"), fh.objects, fh.conductor)};
    std::vector<std::string> which =
        cfg.axioms.empty() ? std::vector<std::string>{"COB", "CYBE", "CYBE-I", "CYBE-II"}
                           : cfg.axioms;
    reports = check_rmatrix(h, r, which);
  } else if (mj.contains("cormatrix")) {
    CoRMatrix r{morphism_from_json(mj.at("cormatrix"), fh.objects, fh.conductor)};
    std::vector<std::string> which =
        cfg.axioms.empty() ? std::vector<std::string>{"Bo", "CCYBE", "CCYBE-I", "CCYBE-II"}
                           : cfg.axioms;
    reports = check_cormatrix(h, r, which);
  } else {
    throw FormatError("cybe: file must contain \"rmatrix\" or \"cormatrix\"");
  }
  emit_reports(cfg, reports, out);
  return all_passed(reports) ? 0 : 1;
}

int run_env(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 3)
    throw FormatError("env verify: expected --a a.json --h h.json --maps maps.json");
  BundleFile fa = bundle_from_json(load_json_file(cfg.inputs[0]), cfg.conductor);
  BundleFile fh = bundle_from_json(load_json_file(cfg.inputs[1]), cfg.conductor);
  BraidedLieBialgebra a = fa.principal(), h = fh.principal();
  a.object.name = "A";
  BraidedLieAlgebra la{a.object, Morphism::make({a.object, a.object}, {a.object},
                                                a.bracket.entries())};
  BraidedLieAlgebra lh{h.object, h.bracket};

  std::map<std::string, GradedObject> pair_objects{{"A", la.object}, {"H", lh.object}};
  Json maps = load_json_file(cfg.inputs[2]);
  const long conductor = lcm_long(fa.conductor, fh.conductor);
  Morphism alpha = zero_alpha(la.object, lh.object);
  Morphism beta = zero_beta(la.object, lh.object);
  if (maps.contains("alpha") && !maps.at("alpha").is_null())
    alpha = morphism_from_json(maps.at("alpha"), pair_objects, conductor);
  if (maps.contains("beta") && !maps.at("beta").is_null())
    beta = morphism_from_json(maps.at("beta"), pair_objects, conductor);

  IsoReport iso = verify_env_isomorphism(la, lh, alpha, beta, cfg.degree);
  const bool require_iv = alpha.is_zero() && beta.is_zero();
  Json report{{"degree", cfg.degree},
              {"bracket_compatible", iso.bracket_compatible},
              {"coalgebra_compatible", iso.coalgebra_compatible},
              {"dimensions_match", iso.dimensions_match},
              {"tensor_algebra_identified", iso.tensor_algebra_identified},
              {"injective_on_generators", iso.injective_on_generators},
              {"verified", iso.all(require_iv)}};
  if (!cfg.report_path.empty()) write_json_file(cfg.report_path, report);
  out << json_bytes(report);
  return iso.all(require_iv) ? 0 : 1;
}

int run_examples(const RunConfig& cfg, std::ostream& out) {
  if (cfg.example_name.empty()) throw FormatError("examples: expected a name");
  ExampleBundle ex = example_library(cfg.example_name);
  BundleFile bundle = bundle_of_bialgebra(ex.bialgebra);
  if (ex.r_matrix) bundle.generators.emplace("R", ex.r_matrix->element);

  std::vector<CheckReport> reports;
  {
    Env env = bundle.env();
    reports = check_all(env, ex.axioms);
  }
  if (!cfg.out_path.empty()) {
    std::filesystem::create_directories(cfg.out_path);
    write_json_file(cfg.out_path + "/" + ex.name + ".json", bundle_to_json(bundle));
    write_json_file(cfg.out_path + "/" + ex.name + ".expected_report.json",
                    reports_to_json(reports));
  }
  out << json_bytes(reports_to_json(reports));
  return all_passed(reports) ? 0 : 1;
}

int run_registry(const RunConfig& cfg, std::ostream& out) {
  Json table = Json::array();
  for (const auto& e : axiom_registry()) {
    table.push_back(Json{{"id", e.id},
                         {"lhs", print_diagram(e.lhs)},
                         {"rhs", print_diagram(e.rhs)},
                         {"paper_ref", e.citation}});
  }
  if (!cfg.report_path.empty()) write_json_file(cfg.report_path, table);
  if (cfg.list && cfg.human) {
    for (const auto& e : axiom_registry()) out << e.id << "    " << e.citation << "\n";
  } else {
    out << json_bytes(table);
  }
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "check") return run_check(cfg, out);
    if (cfg.command == "construct") return run_construct(cfg, out);
    if (cfg.command == "qdouble") return run_qdouble(cfg, out);
    if (cfg.command == "cybe") return run_cybe(cfg, out);
    if (cfg.command == "env") return run_env(cfg, out);
    if (cfg.command == "examples") return run_examples(cfg, out);
    if (cfg.command == "registry") return run_registry(cfg, out);
    err << "unknown command: " << cfg.command << "\n";
    return 2;
  } catch (const FormatError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace brlie
