#pragma once

#include <iosfwd>

#include "brlie/serialization.hpp"

namespace brlie {

/// Batch front-end configuration. Exit codes: 0 all requested checks passed,
/// 1 at least one axiom violated (reports still written), 2 malformed
/// input/usage.
struct RunConfig {
  std::string command;  // check | construct | qdouble | cybe | env | examples | registry
  std::vector<std::string> inputs;
  std::vector<std::string> axioms;
  std::string variant;       // construct: shape id; qdouble: op|cop
  std::string out_path;      // artifact output
  std::string report_path;   // report output
  std::string example_name;  // examples
  int degree = 3;            // env
  long conductor = 0;        // 0 = take from input
  bool human = false;        // report renderer
  bool list = false;         // registry --list
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace brlie
