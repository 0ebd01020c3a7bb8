#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "brlie/runner.hpp"

using namespace brlie;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("brlie_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cfg(const RunConfig& cfg, std::string* stdout_text = nullptr) {
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  if (stdout_text) *stdout_text = out.str();
  return code;
}

void write_example(const TempDir& dir, const std::string& name) {
  RunConfig cfg;
  cfg.command = "examples";
  cfg.example_name = name;
  cfg.out_path = dir.path.string();
  REQUIRE(run_cfg(cfg) == 0);
}

}  // namespace

TEST_CASE("registry lists every axiom with citations") {
  RunConfig cfg;
  cfg.command = "registry";
  cfg.list = true;
  std::string text;
  CHECK(run_cfg(cfg, &text) == 0);
  Json table = Json::parse(text);
  CHECK(table.size() == axiom_registry().size());
  for (const auto& row : table) {
    CHECK(row.contains("id"));
    CHECK(row.contains("lhs"));
    CHECK(row.contains("rhs"));
    CHECK(!row.at("paper_ref").get<std::string>().empty());
  }
}

TEST_CASE("check command: exit codes and witnesses") {
  TempDir dir;
  write_example(dir, "sl2_qt");
  RunConfig cfg;
  cfg.command = "check";
  cfg.inputs = {dir.file("sl2_qt.json")};
  cfg.axioms = {"L1", "L2", "CL1", "CL2", "LB", "COB", "CYBE"};
  cfg.report_path = dir.file("report.json");
  CHECK(run_cfg(cfg) == 0);

  // corrupt the bracket entry [h,e] -> 3e in the JSON and expect exit 1
  Json bundle = load_json_file(dir.file("sl2_qt.json"));
  for (auto& entry : bundle["generators"]["bracket_H"]["entries"]) {
    const auto in = entry["in"].get<std::vector<int>>();
    if (in == std::vector<int>{1, 0}) entry["coeff"] = Json::array({{0, "3/1"}});
    if (in == std::vector<int>{0, 1}) entry["coeff"] = Json::array({{0, "-3/1"}});
  }
  write_json_file(dir.file("bad.json"), bundle);
  RunConfig bad = cfg;
  bad.inputs = {dir.file("bad.json")};
  bad.axioms = {"L2"};
  bad.report_path = dir.file("bad_report.json");
  CHECK(run_cfg(bad) == 1);
  Json report = load_json_file(dir.file("bad_report.json"));
  REQUIRE(report.size() == 1);
  CHECK(report[0]["passed"] == false);
  CHECK(report[0]["witness_index"] == Json::array({0, 1, 2}));

  // malformed input is exit 2
  std::ofstream(dir.file("broken.json")) << "{ not json";
  RunConfig broken = cfg;
  broken.inputs = {dir.file("broken.json")};
  CHECK(run_cfg(broken) == 2);
  RunConfig unknown = cfg;
  unknown.axioms = {"NOT_AN_AXIOM"};
  CHECK(run_cfg(unknown) == 2);
}

TEST_CASE("construct command produces a reloadable bundle") {
  TempDir dir;
  write_example(dir, "borel2");
  std::ofstream(dir.file("maps.json")) << "{}";
  RunConfig cfg;
  cfg.command = "construct";
  cfg.variant = "direct_sum";
  cfg.inputs = {dir.file("borel2.json"), dir.file("borel2.json"), dir.file("maps.json")};
  cfg.out_path = dir.file("d.json");
  cfg.report_path = dir.file("theorem.json");
  CHECK(run_cfg(cfg) == 0);

  // closure under serialization: the output reloads as a valid input
  RunConfig check;
  check.command = "check";
  check.inputs = {dir.file("d.json")};
  check.axioms = {"L1", "L2", "CL1", "CL2", "LB"};
  CHECK(run_cfg(check) == 0);
  Json theorem = load_json_file(dir.file("theorem.json"));
  CHECK(theorem["theorem_instance_verified"] == true);
}

TEST_CASE("qdouble command") {
  TempDir dir;
  write_example(dir, "borel2");
  for (const char* variant : {"op", "cop"}) {
    RunConfig cfg;
    cfg.command = "qdouble";
    cfg.variant = variant;
    cfg.inputs = {dir.file("borel2.json")};
    cfg.out_path = dir.file(std::string("d_") + variant + ".json");
    cfg.report_path = dir.file(std::string("r_") + variant + ".json");
    CHECK(run_cfg(cfg) == 0);
    Json report = load_json_file(cfg.report_path);
    CHECK(report["dim"] == 4);
    CHECK(report["theorem"]["theorem_instance_verified"] == true);
    // the emitted double reloads and passes the bialgebra axioms
    RunConfig check;
    check.command = "check";
    check.inputs = {cfg.out_path};
    CHECK(run_cfg(check) == 0);
  }
}

TEST_CASE("cybe command on R and r files") {
  TempDir dir;
  write_example(dir, "sl2_qt");
  Json bundle = load_json_file(dir.file("sl2_qt.json"));
  Json rfile{{"rmatrix", bundle["generators"]["R"]}};
  write_json_file(dir.file("R.json"), rfile);
  RunConfig cfg;
  cfg.command = "cybe";
  cfg.inputs = {dir.file("sl2_qt.json"), dir.file("R.json")};
  CHECK(run_cfg(cfg) == 0);

  // failing R: e (x) f alone
  Json bad_r{{"rmatrix",
              Json{{"dom", Json::array()},
                   {"cod", {"H", "H"}},
                   {"entries", Json::array({Json{{"in", Json::array()},
                                                 {"out", {0, 2}},
                                                 {"coeff", Json::array({{0, "1/1"}})}}})}}}};
  write_json_file(dir.file("bad_R.json"), bad_r);
  RunConfig bad = cfg;
  bad.inputs = {dir.file("sl2_qt.json"), dir.file("bad_R.json")};
  bad.axioms = {"CYBE"};
  CHECK(run_cfg(bad) == 1);
  RunConfig nonsense = cfg;
  nonsense.inputs = {dir.file("sl2_qt.json"), dir.file("sl2_qt.json")};
  CHECK(run_cfg(nonsense) == 2);
}

TEST_CASE("env verify command") {
  TempDir dir;
  write_example(dir, "borel2");
  write_example(dir, "zero1");
  std::ofstream(dir.file("maps.json")) << "{}";
  RunConfig cfg;
  cfg.command = "env";
  cfg.inputs = {dir.file("zero1.json"), dir.file("borel2.json"), dir.file("maps.json")};
  cfg.degree = 3;
  cfg.report_path = dir.file("iso.json");
  std::string text;
  CHECK(run_cfg(cfg, &text) == 0);
  Json iso = Json::parse(text);
  CHECK(iso["verified"] == true);
  CHECK(iso["tensor_algebra_identified"] == true);
}

TEST_CASE("determinism: identical runs produce identical bytes") {
  TempDir dir;
  write_example(dir, "sl2_qt");
  for (int round = 0; round < 2; ++round) {
    RunConfig cfg;
    cfg.command = "check";
    cfg.inputs = {dir.file("sl2_qt.json")};
    cfg.axioms = {"L1", "L2", "CL1", "CL2", "LB", "COB", "CYBE", "CYBE-I", "CYBE-II"};
    cfg.report_path = dir.file("det_" + std::to_string(round) + ".json");
    CHECK(run_cfg(cfg) == 0);
  }
  CHECK(slurp(dir.file("det_0.json")) == slurp(dir.file("det_1.json")));
}

TEST_CASE("examples command writes bundle plus expected report") {
  TempDir dir;
  for (const auto& name : example_names()) {
    write_example(dir, name);
    CHECK(fs::exists(dir.file(name + ".json")));
    CHECK(fs::exists(dir.file(name + ".expected_report.json")));
    Json expected = load_json_file(dir.file(name + ".expected_report.json"));
    for (const auto& row : expected) CHECK(row["passed"] == true);
  }
}
