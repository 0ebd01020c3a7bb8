#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brlie/diagram.hpp"

namespace brlie {

/// One registry row: an axiom as a pair of tangle expressions whose
/// difference must evaluate to zero, with the citation it was transcribed
/// from. The registry is data so every transcription is auditable.
struct AxiomEntry {
  std::string id;
  ExprPtr lhs;
  ExprPtr rhs;
  std::vector<std::string> required_generators;
  std::string citation;
};

/// All axioms, fixed order. Signatures of lhs and rhs agree for every entry
/// (self-checked on first access).
const std::vector<AxiomEntry>& axiom_registry();
const AxiomEntry& axiom(const std::string& id);
bool has_axiom(const std::string& id);

/// Right-handed (SLB) on H(x)H: the left-right mirror of the registry's SLB
/// entry, used by the double-matched-pair hypothesis sweep.
const AxiomEntry& slb_right_entry();

struct CheckReport {
  std::string axiom;
  std::string target;  // object name the axiom was instantiated on
  bool passed = false;
  std::optional<Morphism::Witness> witness;
  std::string citation;
};

/// Evaluate lhs - rhs in `env`; passed iff the residual vanishes. The
/// witness is the lexicographically smallest nonzero residual entry.
CheckReport check_axiom_entry(const AxiomEntry& entry, const Env& env,
                              const std::string& target = "");
CheckReport check_axiom(const Env& env, const std::string& axiom_id,
                        const std::string& target = "");

/// Residual morphism lhs - rhs (zero iff the axiom holds).
Morphism axiom_residual(const AxiomEntry& entry, const Env& env);

/// Batched, deterministic order. Honors BRLIE_JOBS for parallel evaluation;
/// report order is independent of the job count.
std::vector<CheckReport> check_all(const Env& env, const std::vector<std::string>& axiom_ids,
                                   const std::string& target = "");

/// Environment binding a single object with its (co)bracket to the H slot,
/// so single-object axioms (L1, L2, CL1, CL2, LB, COB, ...) can run on it.
Env single_object_env(const GradedObject& obj, const Morphism* bracket,
                      const Morphism* cobracket);

}  // namespace brlie
