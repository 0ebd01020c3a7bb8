#include "brlie/axioms.hpp"

#include <cstdlib>
#include <future>
#include <set>

namespace brlie {

namespace {

struct RawEntry {
  const char* id;
  const char* lhs;
  const char* rhs;
  const char* citation;
};

// Transcribed bottom-up from the displayed tangles: diagrams compose
// top-to-bottom, our comp(f, g) means "g then f". All instances here are
// symmetric pairs, so the single crossing symbol is braid(X, Y) throughout.
const RawEntry kRaw[] = {
    {"L1",
     "comp(bracket_H, add(tensor(id(H), id(H)), braid(H,H)))",
     "zero(H,H -> H)",
     "Sec.0 Def. braided Lie algebra, (L1) C-anti-symmetry"},

    {"L2",
     "comp(bracket_H, tensor(bracket_H, id(H)),"
     "     add(tensor(id(H), id(H), id(H)),"
     "         comp(tensor(braid(H,H), id(H)), tensor(id(H), braid(H,H))),"
     "         comp(tensor(id(H), braid(H,H)), tensor(braid(H,H), id(H)))))",
     "zero(H,H,H -> H)",
     "Sec.0 Def. braided Lie algebra, (L2) C-Jacobi identity"},

    {"CL1",
     "comp(add(tensor(id(H), id(H)), braid(H,H)), cobracket_H)",
     "zero(H -> H,H)",
     "Sec.0 Def. braided Lie coalgebra, (CL1) C-co-anti-symmetry"},

    {"CL2",
     "comp(add(tensor(id(H), id(H), id(H)),"
     "         comp(tensor(braid(H,H), id(H)), tensor(id(H), braid(H,H))),"
     "         comp(tensor(id(H), braid(H,H)), tensor(braid(H,H), id(H)))),"
     "     tensor(cobracket_H, id(H)), cobracket_H)",
     "zero(H -> H,H,H)",
     "Sec.0 Def. braided Lie coalgebra, (CL2) C-co-Jacobi identity"},

    {"LB",
     "comp(cobracket_H, bracket_H)",
     "comp(add(comp(tensor(bracket_H, id(H)), tensor(id(H), cobracket_H)),"
     "         comp(tensor(id(H), bracket_H), tensor(braid(H,H), id(H)),"
     "              tensor(id(H), cobracket_H))),"
     "     sub(tensor(id(H), id(H)), braid(H,H)))",
     "Sec.0 Def. braided Lie bialgebra, (LB)"},

    {"MOD",
     "comp(alpha, tensor(bracket_H, id(A)))",
     "sub(comp(alpha, tensor(id(H), alpha)),"
     "    comp(alpha, tensor(id(H), alpha), tensor(braid(H,H), id(A))))",
     "Sec.0, left H-module law"},

    {"COMOD",
     "comp(tensor(cobracket_H, id(A)), phi)",
     "sub(comp(tensor(id(H), phi), phi),"
     "    comp(tensor(braid(H,H), id(A)), tensor(id(H), phi), phi))",
     "Sec.0, left H-comodule law"},

    {"MODLIE",
     "comp(alpha, tensor(id(H), bracket_A))",
     "add(comp(bracket_A, tensor(alpha, id(A))),"
     "    comp(bracket_A, tensor(id(A), alpha), tensor(braid(H,A), id(A))))",
     "Sec.0, H-module Lie algebra law"},

    {"COMODLIE",
     "comp(phi, bracket_A)",
     "add(comp(tensor(id(H), bracket_A), tensor(phi, id(A))),"
     "    comp(tensor(id(H), bracket_A), tensor(braid(A,H), id(A)), tensor(id(A), phi)))",
     "Sec.0, H-comodule braided Lie algebra law"},

    {"YD-left",
     "comp(phi, alpha)",
     "add(comp(tensor(bracket_H, id(A)), tensor(id(H), phi)),"
     "    comp(tensor(id(H), alpha), tensor(braid(H,H), id(A)), tensor(id(H), phi)),"
     "    comp(tensor(id(H), alpha), tensor(cobracket_H, id(A))))",
     "Sec.0, left-left Yetter-Drinfeld condition"},

    {"YD-right",
     "comp(psi, beta)",
     "add(comp(tensor(id(H), bracket_A), tensor(psi, id(A))),"
     "    comp(tensor(beta, id(A)), tensor(id(H), braid(A,A)), tensor(psi, id(A))),"
     "    comp(tensor(beta, id(A)), tensor(id(H), cobracket_A)))",
     "Sec.0, right-right Yetter-Drinfeld condition"},

    {"SLB",
     "comp(cobracket_A, bracket_A)",
     "sub(comp(add(comp(tensor(bracket_A, id(A)), tensor(id(A), cobracket_A)),"
     "             comp(tensor(id(A), bracket_A), tensor(braid(A,A), id(A)),"
     "                  tensor(id(A), cobracket_A))),"
     "         sub(tensor(id(A), id(A)), braid(A,A))),"
     "    add(comp(tensor(alpha, id(A)), tensor(braid(A,H), id(A)), tensor(id(A), phi)),"
     "        comp(tensor(id(A), alpha), tensor(braid(H,A), id(A)), tensor(phi, id(A))),"
     "        neg(comp(tensor(alpha, id(A)), tensor(id(H), braid(A,A)), tensor(phi, id(A)))),"
     "        neg(comp(tensor(id(A), alpha), tensor(braid(H,A), id(A)),"
     "                 tensor(id(H), braid(A,A)), tensor(braid(A,H), id(A)),"
     "                 tensor(id(A), phi)))))",
     "Sec.0, (SLB) infinitesimal braided Lie bialgebra"},

    {"M1",
     "comp(alpha, tensor(id(H), bracket_A))",
     "add(comp(bracket_A, tensor(alpha, id(A))),"
     "    comp(bracket_A, tensor(id(A), alpha), tensor(braid(H,A), id(A))),"
     "    comp(alpha, tensor(beta, id(A))),"
     "    neg(comp(alpha, tensor(beta, id(A)), tensor(id(H), braid(A,A)))))",
     "Sec.2 Def. matched pair of braided Lie algebras, (M1)"},

    {"M2",
     "comp(beta, tensor(bracket_H, id(A)))",
     "add(comp(bracket_H, tensor(id(H), beta)),"
     "    comp(bracket_H, tensor(beta, id(H)), tensor(id(H), braid(H,A))),"
     "    comp(beta, tensor(id(H), alpha)),"
     "    neg(comp(beta, tensor(id(H), alpha), tensor(braid(H,H), id(A)))))",
     "Sec.2 Def. matched pair of braided Lie algebras, (M2)"},

    {"CM1",
     "comp(tensor(id(H), cobracket_A), phi)",
     "add(comp(tensor(phi, id(A)), cobracket_A),"
     "    comp(tensor(braid(A,H), id(A)), tensor(id(A), phi), cobracket_A),"
     "    comp(tensor(psi, id(A)), phi),"
     "    neg(comp(tensor(id(H), braid(A,A)), tensor(psi, id(A)), phi)))",
     "Sec.2 Def. matched pair of braided Lie coalgebras, (CM1)"},

    {"CM2",
     "comp(tensor(cobracket_H, id(A)), psi)",
     "add(comp(tensor(id(H), psi), cobracket_H),"
     "    comp(tensor(id(H), braid(A,H)), tensor(psi, id(H)), cobracket_H),"
     "    comp(tensor(id(H), phi), psi),"
     "    neg(comp(tensor(braid(H,H), id(A)), tensor(id(H), phi), psi)))",
     "Sec.2 Def. matched pair of braided Lie coalgebras, (CM2)"},

    {"B1",
     "comp(cobracket_A, alpha)",
     "add(comp(tensor(alpha, id(A)), tensor(id(H), cobracket_A)),"
     "    comp(tensor(id(A), alpha), tensor(braid(H,A), id(A)), tensor(id(H), cobracket_A)),"
     "    comp(tensor(alpha, id(A)), tensor(id(H), braid(A,A)), tensor(psi, id(A))),"
     "    neg(comp(tensor(id(A), alpha), tensor(braid(H,A), id(A)), tensor(psi, id(A)))))",
     "Sec.2 Def. double matched pair, (B1)"},

    {"B2",
     "comp(cobracket_H, beta)",
     "add(comp(tensor(id(H), beta), tensor(cobracket_H, id(A))),"
     "    comp(tensor(beta, id(H)), tensor(id(H), braid(H,A)), tensor(cobracket_H, id(A))),"
     "    comp(tensor(id(H), beta), tensor(braid(H,H), id(A)), tensor(id(H), phi)),"
     "    neg(comp(tensor(beta, id(H)), tensor(id(H), braid(H,A)), tensor(id(H), phi))))",
     "Sec.2 Def. double matched pair, (B2)"},

    {"B3",
     "comp(phi, bracket_A)",
     "add(comp(tensor(id(H), bracket_A), tensor(phi, id(A))),"
     "    comp(tensor(id(H), bracket_A), tensor(braid(A,H), id(A)), tensor(id(A), phi)),"
     "    comp(tensor(beta, id(A)), tensor(id(H), braid(A,A)), tensor(phi, id(A))),"
     "    neg(comp(tensor(beta, id(A)), tensor(braid(A,H), id(A)), tensor(id(A), phi))))",
     "Sec.2 Def. double matched pair, (B3)"},

    {"B4",
     "comp(psi, bracket_H)",
     "add(comp(tensor(bracket_H, id(A)), tensor(id(H), psi)),"
     "    comp(tensor(bracket_H, id(A)), tensor(id(H), braid(A,H)), tensor(psi, id(H))),"
     "    comp(tensor(id(H), alpha), tensor(braid(H,H), id(A)), tensor(id(H), psi)),"
     "    neg(comp(tensor(id(H), alpha), tensor(id(H), braid(A,H)), tensor(psi, id(H)))))",
     "Sec.2 Def. double matched pair, (B4)"},

    {"B5",
     "add(comp(phi, alpha), comp(psi, beta))",
     "add(comp(tensor(bracket_H, id(A)), tensor(id(H), phi)),"
     "    comp(tensor(id(H), alpha), tensor(braid(H,H), id(A)), tensor(id(H), phi)),"
     "    comp(tensor(id(H), alpha), tensor(cobracket_H, id(A))),"
     "    comp(tensor(id(H), bracket_A), tensor(psi, id(A))),"
     "    comp(tensor(beta, id(A)), tensor(id(H), braid(A,A)), tensor(psi, id(A))),"
     "    comp(tensor(beta, id(A)), tensor(id(H), cobracket_A)))",
     "Sec.2 Def. double matched pair, (B5)"},

    {"COB",
     "cobracket_H",
     "add(comp(tensor(bracket_H, id(H)), tensor(id(H), R)),"
     "    comp(tensor(id(H), bracket_H), tensor(braid(H,H), id(H)), tensor(id(H), R)))",
     "Sec.3, (COB) coboundary condition"},

    {"CYBE",
     "add(comp(tensor(bracket_H, id(H), id(H)), tensor(id(H), braid(H,H), id(H)),"
     "         tensor(R, R)),"
     "    comp(tensor(id(H), bracket_H, id(H)), tensor(R, R)),"
     "    comp(tensor(id(H), id(H), bracket_H), tensor(id(H), braid(H,H), id(H)),"
     "         tensor(R, R)))",
     "zero(I -> H,H,H)",
     "Sec.3, classical Yang-Baxter equation"},

    {"CYBE-I",
     "comp(tensor(cobracket_H, id(H)), R)",
     "comp(tensor(id(H), id(H), bracket_H), tensor(id(H), braid(H,H), id(H)),"
     "     tensor(R, R))",
     "Sec.3, (CYBE) equivalent form (I)"},

    {"CYBE-II",
     "comp(tensor(id(H), cobracket_H), R)",
     "comp(tensor(bracket_H, id(H), id(H)), tensor(id(H), R, id(H)), R)",
     "Sec.3, (CYBE) equivalent form (II)"},

    {"Bo",
     "bracket_H",
     "add(comp(tensor(id(H), r), tensor(cobracket_H, id(H))),"
     "    comp(tensor(id(H), r), tensor(braid(H,H), id(H)), tensor(id(H), cobracket_H)))",
     "Sec.3, (Bo) co-coboundary condition"},

    {"CCYBE",
     "add(comp(tensor(r, r), tensor(id(H), braid(H,H), id(H)),"
     "         tensor(cobracket_H, id(H), id(H))),"
     "    comp(tensor(r, r), tensor(id(H), cobracket_H, id(H))),"
     "    comp(tensor(r, r), tensor(id(H), braid(H,H), id(H)),"
     "         tensor(id(H), id(H), cobracket_H)))",
     "zero(H,H,H -> I)",
     "Sec.3, classical Co-Yang-Baxter equation"},

    {"CCYBE-I",
     "comp(r, tensor(bracket_H, id(H)))",
     "comp(tensor(r, r), tensor(id(H), braid(H,H), id(H)),"
     "     tensor(id(H), id(H), cobracket_H))",
     "Sec.3, (CCYBE) equivalent form (I)"},

    {"CCYBE-II",
     "comp(r, tensor(id(H), bracket_H))",
     "comp(r, tensor(id(H), r, id(H)), tensor(cobracket_H, id(H), id(H)))",
     "Sec.3, (CCYBE) equivalent form (II)"},
};

std::vector<std::string> collect_generators(const ExprPtr& e) {
  std::set<std::string> names;
  std::vector<ExprPtr> stack{e};
  while (!stack.empty()) {
    ExprPtr cur = stack.back();
    stack.pop_back();
    if (cur->kind == DiagramExpr::Kind::Generator) names.insert(cur->name);
    for (const auto& a : cur->args) stack.push_back(a);
  }
  return {names.begin(), names.end()};
}

AxiomEntry build_entry(std::string id, ExprPtr lhs, ExprPtr rhs, std::string citation) {
  AxiomEntry entry;
  entry.id = std::move(id);
  entry.lhs = std::move(lhs);
  entry.rhs = std::move(rhs);
  entry.citation = std::move(citation);
  auto gen_l = collect_generators(entry.lhs);
  auto gen_r = collect_generators(entry.rhs);
  std::set<std::string> all(gen_l.begin(), gen_l.end());
  all.insert(gen_r.begin(), gen_r.end());
  entry.required_generators.assign(all.begin(), all.end());
  // Registry self-check: both sides must infer the same signature.
  SymSig sl = infer_signature(entry.lhs, standard_generator_signatures());
  SymSig sr = infer_signature(entry.rhs, standard_generator_signatures());
  if (!(sl == sr))
    throw TypeError("axiom " + entry.id + ": signature mismatch " + sig_str(sl) + " vs " +
                    sig_str(sr));
  return entry;
}

std::vector<AxiomEntry> build_registry() {
  std::vector<AxiomEntry> out;
  for (const auto& raw : kRaw)
    out.push_back(build_entry(raw.id, parse_diagram(raw.lhs), parse_diagram(raw.rhs),
                              raw.citation));
  return out;
}

}  // namespace

const std::vector<AxiomEntry>& axiom_registry() {
  static const std::vector<AxiomEntry> registry = build_registry();
  return registry;
}

bool has_axiom(const std::string& id) {
  for (const auto& e : axiom_registry())
    if (e.id == id) return true;
  return false;
}

const AxiomEntry& axiom(const std::string& id) {
  for (const auto& e : axiom_registry())
    if (e.id == id) return e;
  throw Error("unknown axiom id: " + id);
}

const AxiomEntry& slb_right_entry() {
  static const AxiomEntry entry = [] {
    const AxiomEntry& slb = axiom("SLB");
    return build_entry("SLB-right", mirror_diagram(slb.lhs), mirror_diagram(slb.rhs),
                       "Sec.0, (SLB) right-handed form (mirror)");
  }();
  return entry;
}

Morphism axiom_residual(const AxiomEntry& entry, const Env& env) {
  return sub(evaluate(entry.lhs, env), evaluate(entry.rhs, env));
}

CheckReport check_axiom_entry(const AxiomEntry& entry, const Env& env,
                              const std::string& target) {
  CheckReport report;
  report.axiom = entry.id;
  report.target = target;
  report.citation = entry.citation;
  Morphism residual = axiom_residual(entry, env);
  report.passed = residual.is_zero();
  if (!report.passed) report.witness = residual.first_nonzero();
  return report;
}

CheckReport check_axiom(const Env& env, const std::string& axiom_id, const std::string& target) {
  return check_axiom_entry(axiom(axiom_id), env, target);
}

std::vector<CheckReport> check_all(const Env& env, const std::vector<std::string>& axiom_ids,
                                   const std::string& target) {
  long jobs = 1;
  if (const char* j = std::getenv("BRLIE_JOBS")) jobs = std::max(1L, std::atol(j));
  std::vector<CheckReport> out(axiom_ids.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < axiom_ids.size(); ++i)
      out[i] = check_axiom(env, axiom_ids[i], target);
    return out;
  }
  std::vector<std::future<void>> tasks;
  std::atomic<size_t> next{0};
  for (long t = 0; t < jobs; ++t) {
    tasks.push_back(std::async(std::launch::async, [&] {
      for (size_t i = next.fetch_add(1); i < axiom_ids.size(); i = next.fetch_add(1))
        out[i] = check_axiom(env, axiom_ids[i], target);
    }));
  }
  for (auto& task : tasks) task.get();
  return out;
}

Env single_object_env(const GradedObject& obj, const Morphism* bracket,
                      const Morphism* cobracket) {
  Env env;
  env.objects["H"] = obj;
  if (bracket) env.generators["bracket_H"] = *bracket;
  if (cobracket) env.generators["cobracket_H"] = *cobracket;
  return env;
}

}  // namespace brlie
