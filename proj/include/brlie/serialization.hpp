#pragma once

#include <json.hpp>

#include "brlie/doubles.hpp"
#include "brlie/examples_lib.hpp"

namespace brlie {

struct FormatError : Error {
  using Error::Error;
};

using Json = nlohmann::ordered_json;

/// Scalar text encoding: list of [power, "num/den"] pairs over the ambient
/// conductor, e.g. [[0,"1/2"],[1,"-1/1"]] for 1/2 - zeta.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, long conductor);

Json group_to_json(const GroupData& g);
GroupData group_from_json(const Json& j);

Json object_to_json(const GradedObject& obj);
GradedObject object_from_json(const Json& j, const GroupData& g);

/// Morphism: {"dom": [names], "cod": [names], "entries":
/// [{"in": [...], "out": [...], "coeff": ...}, ...]}, names resolved
/// against the bundle's objects (trailing '*' forms duals).
Json morphism_to_json(const Morphism& m, const std::map<std::string, GradedObject>& objects);
Morphism morphism_from_json(const Json& j, const std::map<std::string, GradedObject>& objects,
                            long conductor);

/// A bundle file: {"format": 1, "conductor": N, "group": ..., "objects":
/// [...], "generators": {...}}. The conductor defaults to the group's and
/// fixes the session's working conductor; all scalars are promoted to it at
/// load.
struct BundleFile {
  long conductor = 1;
  GroupData group;
  std::map<std::string, GradedObject> objects;
  std::map<std::string, Morphism> generators;

  Env env() const;
  /// Single-object view: requires object "H" with bracket_H/cobracket_H.
  BraidedLieBialgebra principal() const;
  bool has_pair() const;  // objects A and H both present
  PairBundle pair() const;
};

Json bundle_to_json(const BundleFile& b);
BundleFile bundle_from_json(const Json& j, long conductor_override = 0);
BundleFile bundle_of_bialgebra(const BraidedLieBialgebra& b);
BundleFile bundle_of_pair(const PairBundle& p);

Json report_to_json(const CheckReport& r);
Json reports_to_json(const std::vector<CheckReport>& rs);
Json theorem_report_to_json(const TheoremReport& r);

std::string render_human(const std::vector<CheckReport>& rs);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
/// Serialized bytes used everywhere a file is written (4-space indent,
/// trailing newline) so outputs are byte-stable.
std::string json_bytes(const Json& j);

}  // namespace brlie
