#include <CLI11.hpp>

#include <iostream>

#include "brlie/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for braided Lie bialgebras: axiom checks, double "
               "bicrosssums, quantum doubles, bosonisation and truncated enveloping "
               "algebras over cyclotomic fields"};
  app.require_subcommand(1);

  brlie::RunConfig cfg;
  std::string axiom_csv;
  auto parse_axioms = [&]() {
    cfg.axioms.clear();
    std::string cur;
    for (char c : axiom_csv) {
      if (c == ',') {
        if (!cur.empty()) cfg.axioms.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) cfg.axioms.push_back(cur);
  };

  auto* check = app.add_subcommand("check", "run axiom checks on a bundle");
  check->add_option("bundle", cfg.inputs, "bundle JSON file")->required();
  check->add_option("--axioms", axiom_csv, "comma-separated axiom ids (default: bialgebra set)");
  check->add_option("--report", cfg.report_path, "write the report JSON here");
  check->add_option("--conductor", cfg.conductor, "promote all scalars to this conductor");
  check->add_flag("--human", cfg.human, "human-readable report");

  auto* construct = app.add_subcommand("construct", "build a double bicrosssum");
  std::string a_path, h_path, maps_path;
  construct->add_option("--variant", cfg.variant, "shape id (default double_bicrosssum)");
  construct->add_option("--a", a_path, "bundle for A")->required();
  construct->add_option("--h", h_path, "bundle for H")->required();
  construct->add_option("--maps", maps_path, "JSON with alpha/beta/phi/psi")->required();
  construct->add_option("--out", cfg.out_path, "write the constructed bundle here");
  construct->add_option("--report", cfg.report_path, "write the theorem report here");
  construct->add_option("--conductor", cfg.conductor, "conductor override");

  auto* qdouble = app.add_subcommand("qdouble", "quantum double of a bundle");
  qdouble->add_option("bundle", cfg.inputs, "bundle JSON file")->required();
  qdouble->add_option("--variant", cfg.variant, "op or cop (default cop)");
  qdouble->add_option("--out", cfg.out_path, "write the double here");
  qdouble->add_option("--report", cfg.report_path, "write the report here");
  qdouble->add_option("--conductor", cfg.conductor, "conductor override");

  auto* cybe = app.add_subcommand("cybe", "check R/r-matrix conditions");
  cybe->add_option("bundle", cfg.inputs, "bundle and R/r files")->expected(2)->required();
  cybe->add_option("--axioms", axiom_csv, "subset of conditions");
  cybe->add_option("--report", cfg.report_path, "write the report here");
  cybe->add_flag("--human", cfg.human, "human-readable report");

  auto* env = app.add_subcommand("env", "truncated enveloping checks");
  auto* env_verify = env->add_subcommand("verify", "verify the enveloping isomorphism");
  env_verify->add_option("--a", a_path, "bundle for A")->required();
  env_verify->add_option("--h", h_path, "bundle for H")->required();
  env_verify->add_option("--maps", maps_path, "JSON with alpha/beta")->required();
  env_verify->add_option("--degree", cfg.degree, "degree cap (default 3)");
  env_verify->add_option("--report", cfg.report_path, "write the report here");

  auto* examples = app.add_subcommand("examples", "emit a library example bundle");
  examples->add_option("name", cfg.example_name, "example name")->required();
  examples->add_option("--out", cfg.out_path, "directory for the bundle files");

  auto* registry = app.add_subcommand("registry", "the axiom registry");
  registry->add_flag("--list", cfg.list, "list axiom ids with citations");
  registry->add_option("--report", cfg.report_path, "write the registry table here");
  registry->add_flag("--human", cfg.human, "plain id + citation lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  parse_axioms();
  if (check->parsed()) cfg.command = "check";
  if (construct->parsed() || env->parsed()) {
    cfg.inputs = {a_path, h_path, maps_path};
    cfg.command = construct->parsed() ? "construct" : "env";
  }
  if (qdouble->parsed()) cfg.command = "qdouble";
  if (cybe->parsed()) cfg.command = "cybe";
  if (examples->parsed()) cfg.command = "examples";
  if (registry->parsed()) cfg.command = "registry";

  return brlie::run(cfg, std::cout, std::cerr);
}
