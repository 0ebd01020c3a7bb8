#pragma once

#include <map>
#include <optional>
#include <vector>

#include "brlie/graded.hpp"

namespace brlie {

using Index = std::uint64_t;

/// Tensor-word signature: a list of graded objects (empty = unit object I).
using Signature = std::vector<GradedObject>;

std::size_t signature_dim(const Signature& sig);
/// Row-major split/join of a flat index, leftmost factor most significant.
std::vector<Index> split_index(const Signature& sig, Index flat);
Index join_index(const Signature& sig, const std::vector<Index>& parts);

GroupElement total_degree(const Signature& sig, Index flat);
Character total_character(const Signature& sig, Index flat);

/// Degree-0 equivariant linear map between tensor words, stored sparsely by
/// domain column. Homogeneity (equal total degree and character on the two
/// ends of every entry) is checked at construction and preserved by all
/// operations.
class Morphism {
 public:
  using Column = std::map<Index, Scalar>;

  Morphism() = default;
  /// Validating constructor; throws HomogeneityError / ShapeError.
  static Morphism make(Signature dom, Signature cod,
                       std::map<Index, Column> entries);
  static Morphism zero(Signature dom, Signature cod);
  static Morphism identity(Signature objs);

  const Signature& dom() const { return dom_; }
  const Signature& cod() const { return cod_; }
  const std::map<Index, Column>& entries() const { return cols_; }
  std::size_t dom_dim() const { return signature_dim(dom_); }
  std::size_t cod_dim() const { return signature_dim(cod_); }

  bool is_zero() const { return cols_.empty(); }
  Scalar entry(Index dom_index, Index cod_index) const;

  /// Image of the basis vector at `dom_index`, as a sparse column.
  Column apply(Index dom_index) const;

  /// Lexicographically smallest nonzero entry: (domain index, codomain
  /// index, scalar). Empty when the morphism is zero.
  struct Witness {
    std::vector<Index> dom_index;
    std::vector<Index> cod_index;
    Scalar value;
  };
  std::optional<Witness> first_nonzero() const;

  friend Morphism compose(const Morphism& f, const Morphism& g);  // f after g
  friend Morphism tensor(const Morphism& f, const Morphism& g);
  friend Morphism add(const Morphism& f, const Morphism& g);
  friend Morphism sub(const Morphism& f, const Morphism& g);
  friend Morphism scale(const Scalar& s, const Morphism& f);
  friend Morphism neg(const Morphism& f);
  friend bool operator==(const Morphism& a, const Morphism& b);
  friend bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }

  /// Same entry table regardless of object names/labels (used for
  /// structure-constant comparisons across canonical identifications).
  friend bool same_entries(const Morphism& a, const Morphism& b);

 private:
  void prune();  // drop explicit zeros
  void check_homogeneous() const;

  Signature dom_, cod_;
  std::map<Index, Column> cols_;
};

/// C_{U,V}(u (x) v) = chi_v(g_u) * v (x) u.
Morphism braiding(const GradedObject& u, const GradedObject& v);
/// (C_{V,U})^{-1}: U (x) V -> V (x) U.
Morphism inverse_braiding(const GradedObject& u, const GradedObject& v);

/// ev_U: U* (x) U -> I, ev(u^i (x) u_j) = delta_ij.
Morphism evaluation(const GradedObject& u);
/// coev_U: I -> U (x) U*, 1 -> sum_i u_i (x) u^i.
Morphism coevaluation(const GradedObject& u);

/// Injections/projections for D = U (+) V built by direct_sum_object.
Morphism injection_left(const GradedObject& u, const GradedObject& v);
Morphism injection_right(const GradedObject& u, const GradedObject& v);
Morphism projection_left(const GradedObject& u, const GradedObject& v);
Morphism projection_right(const GradedObject& u, const GradedObject& v);

struct DirectSumDuality {
  GradedObject object;      // U (+) V
  GradedObject dual;        // U* (+) V*
  Morphism ev;              // d_D = d~_U + d~_V
  Morphism coev;            // b_D = b~_U + b~_V
};
/// Left duality of a direct sum, induced summandwise.
DirectSumDuality direct_sum_duality(const GradedObject& u, const GradedObject& v);

}  // namespace brlie
