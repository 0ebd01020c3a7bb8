#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brlie/cyclotomic.hpp"

namespace brlie {

/// Finite abelian group Gamma = prod Z/n_t given by its cyclic orders.
/// The trivial group is the empty product.
struct GroupData {
  std::vector<long> cyclic_orders;

  bool operator==(const GroupData&) const = default;
  /// lcm of the cyclic orders (1 for the trivial group): the natural
  /// conductor for braiding coefficients.
  long conductor() const;
  void validate() const;  // all orders >= 1
};

/// Element of Gamma (residues) or of the dual group (character exponents);
/// both are residue vectors and compose additively, so they share a type.
struct Residues {
  std::vector<long> v;

  bool operator==(const Residues&) const = default;
  bool operator<(const Residues& o) const { return v < o.v; }
};

using GroupElement = Residues;
using Character = Residues;

Residues reduce(const GroupData& g, Residues r);
Residues group_add(const GroupData& g, const Residues& a, const Residues& b);
Residues group_neg(const GroupData& g, const Residues& a);
GroupElement group_identity(const GroupData& g);

/// chi(g) = prod_t zeta_{n_t}^{c_t * g_t}, as an exact Scalar.
Scalar pairing(const GroupData& g, const Character& chi, const GroupElement& elem);

struct BasisVector {
  std::string label;
  GroupElement degree;
  Character character;

  bool operator==(const BasisVector&) const = default;
};

/// Finite-dimensional Gamma-graded object with a character on each basis
/// vector (diagonal Yetter-Drinfeld datum).
struct GradedObject {
  std::string name;
  GroupData group;
  std::vector<BasisVector> basis;

  bool operator==(const GradedObject&) const = default;
  std::size_t dim() const { return basis.size(); }
  void validate() const;  // unique labels, residues in range
};

/// Dual object: same basis order, inverted degrees and characters.
GradedObject dual_object(const GradedObject& u);

/// Direct sum U (+) V: U's basis then V's, labels prefixed to stay unique.
GradedObject direct_sum_object(const GradedObject& u, const GradedObject& v);

/// True iff the braiding is symmetric across every pair of basis vectors of
/// the listed objects: chi_v(g_u) * chi_u(g_v) = 1.
bool is_symmetric_on(const std::vector<GradedObject>& objects);

}  // namespace brlie
