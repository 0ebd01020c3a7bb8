#pragma once

#include <array>

#include "brlie/structures.hpp"

namespace brlie {

/// The twelve named shapes of A^phi_alpha |><| ^psi_beta H. Each variant
/// zeroes the complementary subset of the four connecting maps.
enum class Variant {
  DoubleBicrosssum,      // alpha, beta, phi, psi
  Bicrosssum,            // alpha, beta
  Bicrosscosum,          // phi, psi
  BisumLeft,             // alpha, phi
  BisumRight,            // beta, psi
  BicrossSumLeft,        // beta, phi
  BicrossSumRight,       // alpha, psi
  SemidirectSumLeft,     // alpha
  SemidirectSumRight,    // beta
  SemidirectCosumLeft,   // phi
  SemidirectCosumRight,  // psi
  DirectSum,             // none
};

const std::vector<std::pair<std::string, Variant>>& variant_names();
Variant variant_from_string(const std::string& s);
std::string variant_to_string(Variant v);
/// Which of (alpha, beta, phi, psi) the variant keeps.
std::array<bool, 4> variant_keeps(Variant v);

struct DoubleBicrosssumSpec {
  BraidedLieBialgebra a;
  BraidedLieBialgebra h;
  ActionData actions;
  Variant variant = Variant::DoubleBicrosssum;

  /// Copy of `actions` with the maps outside the variant zeroed.
  ActionData effective_actions() const;
};

struct DoubleBicrosssum {
  BraidedLieBialgebra d;  // on A (+) H, A's basis first
  Morphism inj_a, inj_h;  // A -> D, H -> D
  Morphism proj_a, proj_h;
};

/// Bracket: [,]_A + alpha - alpha C on the A block, [,]_H + beta - beta C on
/// the H block; cobracket: delta_A + phi - C phi + delta_H + psi - C psi.
/// Requires the braiding symmetric on {A, H}.
DoubleBicrosssum build_double_bicrosssum(const DoubleBicrosssumSpec& spec);

struct TheoremReport {
  std::vector<CheckReport> hypotheses;      // axioms of A, H, matched pairs, B1-B5
  std::vector<CheckReport> slb_hypotheses;  // SLB on A(x)A and its mirror on H(x)H
  std::vector<CheckReport> conclusions;     // L1, L2, CL1, CL2, LB on D
  bool include_slb = true;
  bool hypotheses_pass = false;   // includes SLB when include_slb
  bool conclusions_pass = false;
  bool theorem_instance_verified = false;
};

/// Evaluates the main Theorem on an instance: the double-matched-pair
/// hypothesis sweep, then the bialgebra axioms of the constructed D.
/// (SLB) is reported separately and can be excluded from the verdict.
TheoremReport verify_main_theorem(const DoubleBicrosssumSpec& spec, bool include_slb = true);

}  // namespace brlie
