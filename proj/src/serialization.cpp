#include "brlie/serialization.hpp"

#include <fstream>

namespace brlie {

Json scalar_to_json(const Scalar& s) {
  Json out = Json::array();
  const auto& c = s.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Rational q = c[i];
    out.push_back(Json::array({i, q.get_num().get_str() + "/" + q.get_den().get_str()}));
  }
  return out;
}

Scalar scalar_from_json(const Json& j, long conductor) {
  if (!j.is_array()) throw FormatError("scalar: expected an array of [power, ratio] pairs");
  std::vector<Rational> coeffs(static_cast<size_t>(euler_phi(conductor)), Rational(0));
  std::vector<Rational> raw;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw FormatError("scalar: each entry must be [power, \"num/den\"]");
    const long power = pair[0].get<long>();
    if (power < 0) throw FormatError("scalar: negative power");
    Rational q(pair[1].get<std::string>());
    q.canonicalize();
    if (static_cast<size_t>(power) >= raw.size()) raw.resize(static_cast<size_t>(power) + 1, Rational(0));
    raw[static_cast<size_t>(power)] += q;
  }
  return Scalar::from_coeffs(conductor, std::move(raw));
}

Json group_to_json(const GroupData& g) {
  return Json{{"cyclic_orders", g.cyclic_orders}};
}

GroupData group_from_json(const Json& j) {
  GroupData g;
  if (!j.contains("cyclic_orders")) throw FormatError("group: missing cyclic_orders");
  g.cyclic_orders = j.at("cyclic_orders").get<std::vector<long>>();
  g.validate();
  return g;
}

Json object_to_json(const GradedObject& obj) {
  Json basis = Json::array();
  for (const auto& b : obj.basis)
    basis.push_back(Json{{"label", b.label}, {"degree", b.degree.v}, {"character", b.character.v}});
  return Json{{"name", obj.name}, {"basis", basis}};
}

GradedObject object_from_json(const Json& j, const GroupData& g) {
  GradedObject obj;
  obj.name = j.at("name").get<std::string>();
  obj.group = g;
  for (const auto& b : j.at("basis")) {
    obj.basis.push_back(BasisVector{b.at("label").get<std::string>(),
                                    GroupElement{b.at("degree").get<std::vector<long>>()},
                                    Character{b.at("character").get<std::vector<long>>()}});
  }
  obj.validate();
  return obj;
}

namespace {

Signature resolve_signature(const std::vector<std::string>& names,
                            const std::map<std::string, GradedObject>& objects) {
  Env env;
  env.objects = objects;
  Signature sig;
  for (const auto& n : names) sig.push_back(env.object(n));
  return sig;
}

std::vector<std::string> object_names(const Signature& sig,
                                      const std::map<std::string, GradedObject>& objects) {
  std::vector<std::string> out;
  for (const auto& o : sig) {
    std::string found;
    for (const auto& [name, obj] : objects) {
      if (obj == o) {
        found = name;
        break;
      }
      if (dual_object(obj) == o) {
        found = name + "*";
        break;
      }
    }
    if (found.empty()) throw FormatError("morphism references an object not in the bundle: " + o.name);
    out.push_back(found);
  }
  return out;
}

}  // namespace

Json morphism_to_json(const Morphism& m, const std::map<std::string, GradedObject>& objects) {
  Json entries = Json::array();
  for (const auto& [x, col] : m.entries()) {
    const auto in = split_index(m.dom(), x);
    for (const auto& [y, s] : col) {
      entries.push_back(Json{{"in", in}, {"out", split_index(m.cod(), y)},
                             {"coeff", scalar_to_json(s)}});
    }
  }
  return Json{{"dom", object_names(m.dom(), objects)},
              {"cod", object_names(m.cod(), objects)},
              {"entries", entries}};
}

Morphism morphism_from_json(const Json& j, const std::map<std::string, GradedObject>& objects,
                            long conductor) {
  Signature dom = resolve_signature(j.at("dom").get<std::vector<std::string>>(), objects);
  Signature cod = resolve_signature(j.at("cod").get<std::vector<std::string>>(), objects);
  std::map<Index, Morphism::Column> entries;
  for (const auto& e : j.at("entries")) {
    const auto in = e.at("in").get<std::vector<Index>>();
    const auto out = e.at("out").get<std::vector<Index>>();
    if (in.size() != dom.size() || out.size() != cod.size())
      throw FormatError("morphism entry index rank mismatch");
    Scalar s = scalar_from_json(e.at("coeff"), conductor);
    entries[join_index(dom, in)][join_index(cod, out)] = s;
  }
  return Morphism::make(std::move(dom), std::move(cod), std::move(entries));
}

Env BundleFile::env() const {
  Env env;
  env.objects = objects;
  env.generators = generators;
  return env;
}

BraidedLieBialgebra BundleFile::principal() const {
  auto it = objects.find("H");
  if (it == objects.end()) throw FormatError("bundle has no object H");
  const GradedObject& h = it->second;
  BraidedLieBialgebra out;
  out.object = h;
  auto g = generators.find("bracket_H");
  out.bracket = g == generators.end() ? Morphism::zero({h, h}, {h}) : g->second;
  g = generators.find("cobracket_H");
  out.cobracket = g == generators.end() ? Morphism::zero({h}, {h, h}) : g->second;
  return out;
}

bool BundleFile::has_pair() const { return objects.count("A") && objects.count("H"); }

PairBundle BundleFile::pair() const {
  if (!has_pair()) throw FormatError("bundle lacks objects A and H");
  const GradedObject& a = objects.at("A");
  const GradedObject& h = objects.at("H");
  PairBundle out;
  auto morph = [&](const char* name, Morphism fallback) {
    auto it = generators.find(name);
    return it == generators.end() ? fallback : it->second;
  };
  out.a = {a, morph("bracket_A", Morphism::zero({a, a}, {a})),
           morph("cobracket_A", Morphism::zero({a}, {a, a}))};
  out.h = {h, morph("bracket_H", Morphism::zero({h, h}, {h})),
           morph("cobracket_H", Morphism::zero({h}, {h, h}))};
  out.actions = {morph("alpha", zero_alpha(a, h)), morph("beta", zero_beta(a, h)),
                 morph("phi", zero_phi(a, h)), morph("psi", zero_psi(a, h))};
  return out;
}

Json bundle_to_json(const BundleFile& b) {
  Json objects = Json::array();
  for (const auto& [name, obj] : b.objects) {
    Json oj = object_to_json(obj);
    oj["slot"] = name;
    objects.push_back(oj);
  }
  Json generators = Json::object();
  for (const auto& [name, m] : b.generators) generators[name] = morphism_to_json(m, b.objects);
  return Json{{"format", 1},
              {"conductor", b.conductor},
              {"group", group_to_json(b.group)},
              {"objects", objects},
              {"generators", generators}};
}

BundleFile bundle_from_json(const Json& j, long conductor_override) {
  if (!j.contains("format") || j.at("format").get<int>() != 1)
    throw FormatError("unsupported bundle format (want \"format\": 1)");
  BundleFile b;
  b.group = group_from_json(j.at("group"));
  b.conductor = b.group.conductor();
  if (j.contains("conductor")) b.conductor = lcm_long(b.conductor, j.at("conductor").get<long>());
  if (conductor_override > 0) b.conductor = lcm_long(b.conductor, conductor_override);
  for (const auto& oj : j.at("objects")) {
    GradedObject obj = object_from_json(oj, b.group);
    std::string slot = oj.contains("slot") ? oj.at("slot").get<std::string>() : obj.name;
    b.objects.emplace(slot, std::move(obj));
  }
  if (j.contains("generators"))
    for (const auto& [name, mj] : j.at("generators").items())
      b.generators.emplace(name, morphism_from_json(mj, b.objects, b.conductor));
  return b;
}

BundleFile bundle_of_bialgebra(const BraidedLieBialgebra& b) {
  BundleFile out;
  out.group = b.object.group;
  out.conductor = out.group.conductor();
  out.objects.emplace("H", b.object);
  out.generators.emplace("bracket_H", b.bracket);
  out.generators.emplace("cobracket_H", b.cobracket);
  return out;
}

BundleFile bundle_of_pair(const PairBundle& p) {
  BundleFile out;
  out.group = p.h.object.group;
  out.conductor = out.group.conductor();
  out.objects.emplace("A", p.a.object);
  out.objects.emplace("H", p.h.object);
  out.generators.emplace("bracket_A", p.a.bracket);
  out.generators.emplace("cobracket_A", p.a.cobracket);
  out.generators.emplace("bracket_H", p.h.bracket);
  out.generators.emplace("cobracket_H", p.h.cobracket);
  out.generators.emplace("alpha", p.actions.alpha);
  out.generators.emplace("beta", p.actions.beta);
  out.generators.emplace("phi", p.actions.phi);
  out.generators.emplace("psi", p.actions.psi);
  return out;
}

Json report_to_json(const CheckReport& r) {
  Json out{{"axiom", r.axiom}, {"passed", r.passed}, {"paper_ref", r.citation}};
  if (!r.target.empty()) out["target"] = r.target;
  if (r.witness) {
    out["witness_index"] = r.witness->dom_index;
    out["witness_out"] = r.witness->cod_index;
    out["witness_scalar"] = scalar_to_json(r.witness->value);
  } else {
    out["witness_index"] = nullptr;
    out["witness_out"] = nullptr;
    out["witness_scalar"] = nullptr;
  }
  return out;
}

Json reports_to_json(const std::vector<CheckReport>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(report_to_json(r));
  return out;
}

Json theorem_report_to_json(const TheoremReport& r) {
  return Json{{"hypotheses", reports_to_json(r.hypotheses)},
              {"slb_hypotheses", reports_to_json(r.slb_hypotheses)},
              {"conclusions", reports_to_json(r.conclusions)},
              {"include_slb", r.include_slb},
              {"hypotheses_pass", r.hypotheses_pass},
              {"conclusions_pass", r.conclusions_pass},
              {"theorem_instance_verified", r.theorem_instance_verified}};
}

std::string render_human(const std::vector<CheckReport>& rs) {
  std::string out;
  for (const auto& r : rs) {
    out += (r.passed ? "PASS " : "FAIL ") + r.axiom;
    if (!r.target.empty()) out += " on " + r.target;
    if (r.witness) {
      out += "  witness in=[";
      for (size_t i = 0; i < r.witness->dom_index.size(); ++i)
        out += (i ? "," : "") + std::to_string(r.witness->dom_index[i]);
      out += "] out=[";
      for (size_t i = 0; i < r.witness->cod_index.size(); ++i)
        out += (i ? "," : "") + std::to_string(r.witness->cod_index[i]);
      out += "] value=" + r.witness->value.str();
    }
    out += "    (" + r.citation + ")\n";
  }
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
  return j;
}

std::string json_bytes(const Json& j) { return j.dump(4) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << json_bytes(j);
}

}  // namespace brlie
