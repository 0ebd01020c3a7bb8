#pragma once

#include "brlie/axioms.hpp"

namespace brlie {

struct BraidedLieAlgebra {
  GradedObject object;
  Morphism bracket;  // L (x) L -> L
};

struct BraidedLieCoalgebra {
  GradedObject object;
  Morphism cobracket;  // L -> L (x) L
};

/// Bracket and cobracket together. Construction never rejects; axiom status
/// is established by explicit checks (the tool's purpose includes exhibiting
/// failures).
struct BraidedLieBialgebra {
  GradedObject object;
  Morphism bracket;
  Morphism cobracket;

  static BraidedLieBialgebra zero_structure(const GradedObject& obj);
  Env env() const;  // binds H, bracket_H, cobracket_H
};

/// The four connecting morphisms between a pair (A, H); any may be zero.
struct ActionData {
  Morphism alpha;  // H (x) A -> A
  Morphism beta;   // H (x) A -> H
  Morphism phi;    // A -> H (x) A
  Morphism psi;    // H -> H (x) A

  static ActionData zero(const GradedObject& a, const GradedObject& h);
};

/// Full two-object bundle: everything the axiom registry can mention.
struct PairBundle {
  BraidedLieBialgebra a;
  BraidedLieBialgebra h;
  ActionData actions;

  Env env() const;  // binds A, H and all eight generators
};

/// Zero morphisms with the connecting signatures.
Morphism zero_alpha(const GradedObject& a, const GradedObject& h);
Morphism zero_beta(const GradedObject& a, const GradedObject& h);
Morphism zero_phi(const GradedObject& a, const GradedObject& h);
Morphism zero_psi(const GradedObject& a, const GradedObject& h);

/// The bialgebra axioms of a single object, in report order.
std::vector<CheckReport> check_bialgebra_axioms(const BraidedLieBialgebra& b,
                                                const std::string& target);

/// Hypothesis sets of the Corollaries 2.1-2.7: each id expands to the
/// corollary's specific conditions (stated axioms plus its displayed extra
/// vanishing condition) and every condition is evaluated on the bundle.
std::vector<std::string> corollary_ids();
std::vector<CheckReport> check_corollary_hypotheses(const PairBundle& bundle,
                                                    const std::string& corollary_id);

}  // namespace brlie
