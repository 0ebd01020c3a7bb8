#pragma once

#include "brlie/constructions.hpp"

namespace brlie {

struct UnsupportedCategory : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};
struct NotRestrictable : Error {
  using Error::Error;
};
struct PreconditionViolation : Error {
  using Error::Error;
};

/// PBW monomial as an exponent vector over the Lie basis.
struct Mono {
  std::vector<int> exp;
  int degree() const;
  bool operator<(const Mono& o) const { return exp < o.exp; }
  bool operator==(const Mono&) const = default;
  std::string str(const std::vector<std::string>& labels) const;
};

/// Finitely supported element of the truncated enveloping algebra.
struct EnvElem {
  std::map<Mono, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  int max_degree() const;
  EnvElem& add_term(const Mono& m, const Scalar& c);
  friend EnvElem operator+(const EnvElem& a, const EnvElem& b);
  friend EnvElem operator-(const EnvElem& a, const EnvElem& b);
  friend EnvElem operator*(const Scalar& s, const EnvElem& a);
  friend bool operator==(const EnvElem& a, const EnvElem& b);
};

/// Element of U (x) U (coproduct values and double-cross-product legs).
using EnvElem2 = std::map<std::pair<Mono, Mono>, Scalar>;

/// The degree-cap-D fragment of U(L) for a trivially graded L: nondecreasing
/// monomials in the input basis order, products by straightening
/// x_b x_a -> x_a x_b + [x_b, x_a] (a < b). Products whose factor degrees
/// sum past the cap throw OutOfRange rather than truncating.
class TruncatedEnveloping {
 public:
  TruncatedEnveloping(BraidedLieAlgebra lie, int degree_cap);

  const BraidedLieAlgebra& lie() const { return lie_; }
  int cap() const { return cap_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Mono>& basis() const { return basis_; }
  std::size_t generators() const { return lie_.object.dim(); }

  static long monomials_of_degree(long n, long d);  // C(n+d-1, d)

  Mono generator_mono(std::size_t i) const;
  static Mono unit_mono(std::size_t n);

  /// Normal form of an arbitrary word of generators (letters are basis
  /// indices). `rightmost_pivot` selects the other reduction strategy; both
  /// agree by the diamond property.
  EnvElem straighten(const std::vector<int>& word, bool rightmost_pivot = false) const;

  EnvElem multiply(const EnvElem& u, const EnvElem& v) const;
  EnvElem multiply(const Mono& u, const Mono& v) const;

  /// Coproduct: generators primitive, extended multiplicatively.
  EnvElem2 coproduct(const Mono& m) const;
  Scalar counit(const EnvElem& u) const;

  /// i_L: degree-1 inclusion of a Lie basis element.
  EnvElem include_lie(std::size_t i) const;
  /// Lie bracket of generators i, j expressed in U (degree-1 element).
  EnvElem lie_bracket(std::size_t i, std::size_t j) const;

 private:
  BraidedLieAlgebra lie_;
  int cap_;
  std::vector<Mono> basis_;
};

/// U(A) |><| U(H) at the cap: extended actions on monomials and the
/// double-cross-product multiplication
/// (a (x) x)(b (x) y) = a (x_(1) |> b_(1)) (x) (x_(2) <| b_(2)) y.
class TruncatedDoubleCrossProduct {
 public:
  /// Requires (M1), (M2) for (alpha, beta); throws PreconditionViolation.
  TruncatedDoubleCrossProduct(const BraidedLieAlgebra& a, const BraidedLieAlgebra& h,
                              const Morphism& alpha, const Morphism& beta, int degree_cap);

  const TruncatedEnveloping& left() const { return ua_; }
  const TruncatedEnveloping& right() const { return uh_; }
  int cap() const { return cap_; }

  /// |> : U(H) (x) U(A) -> U(A) and <| : U(H) (x) U(A) -> U(H), extended to
  /// monomials by the matched-pair product identities with primitive
  /// generators.
  EnvElem act_left(const Mono& w, const Mono& m) const;   // w |> m
  EnvElem act_right(const Mono& w, const Mono& m) const;  // w <| m

  /// Product of basis tensors (a (x) x) and (b (x) y); total degree must
  /// stay within the cap.
  EnvElem2 multiply(const Mono& a, const Mono& x, const Mono& b, const Mono& y) const;
  EnvElem2 multiply(const EnvElem2& u, const EnvElem2& v) const;

  /// Degree-1 restrictions (exact by construction).
  Morphism restricted_alpha() const;
  Morphism restricted_beta() const;

 private:
  EnvElem act_left_gen(int x, const Mono& m) const;   // x a generator
  EnvElem act_right_gen_on_gen(const Mono& w, int a) const;  // w <| a, a a generator

  TruncatedEnveloping ua_, uh_;
  Morphism alpha_, beta_;
  int cap_;
  mutable std::map<std::pair<Mono, Mono>, EnvElem> left_cache_;
  mutable std::map<std::pair<Mono, Mono>, EnvElem> right_cache_;
};

/// Degree-1 restriction of a bialgebra-level matched pair on U(A), U(H); the
/// image conditions Im(alpha'(i_H (x) i_A)) in A and Im(beta'(...)) in H are
/// checked and NotRestrictable is thrown when they fail. The restricted pair
/// is returned with its (M1), (M2) reports.
struct RestrictedPair {
  Morphism alpha;
  Morphism beta;
  std::vector<CheckReport> matched_pair_reports;
};
RestrictedPair restrict_matched_pair(const BraidedLieAlgebra& a, const BraidedLieAlgebra& h,
                                     const TruncatedDoubleCrossProduct& product);

struct IsoReport {
  bool bracket_compatible = false;   // (i) f([u,v]) = [f u, f v] on generators
  bool coalgebra_compatible = false; // (ii) f is a coalgebra map on generators
  bool dimensions_match = false;     // (iii) degree-<=D components agree
  bool tensor_algebra_identified = false;  // (iv) alpha=beta=0 only
  bool injective_on_generators = false;    // rank of f on the degree-<=1 part
  bool all(bool require_iv) const {
    return bracket_compatible && coalgebra_compatible && dimensions_match &&
           injective_on_generators && (!require_iv || tensor_algebra_identified);
  }
};

/// Checks U(A |><| H) ~ U(A) |><| U(H) at the cap via f(a, x) = a (x) 1 +
/// 1 (x) x on generators.
IsoReport verify_env_isomorphism(const BraidedLieAlgebra& a, const BraidedLieAlgebra& h,
                                 const Morphism& alpha, const Morphism& beta, int degree_cap);

}  // namespace brlie
