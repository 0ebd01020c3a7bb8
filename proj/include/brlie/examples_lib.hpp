#pragma once

#include "brlie/doubles.hpp"

namespace brlie {

struct InvalidSpec : Error {
  using Error::Error;
};

/// Trivially graded object with the given basis labels.
GradedObject plain_object(const std::string& name, const std::vector<std::string>& labels);

/// sl2 with basis (e, h, f), [h,e] = 2e, [h,f] = -2f, [e,f] = h; cobracket
/// is the coboundary of R = e (x) f + 1/4 h (x) h, computed from the adjoint
/// representation. Returned with that R.
struct Sl2Quasitriangular {
  BraidedLieBialgebra bialgebra;
  RMatrix r_matrix;
};
Sl2Quasitriangular sl2_quasitriangular();

/// Two-dimensional Borel: basis (x, y), [x,y] = y, delta(x) = 0,
/// delta(y) = x (x) y - y (x) x.
BraidedLieBialgebra borel2();

/// Z/2-graded line pair: odd x ([x,x] = y), even y; zero cobracket.
BraidedLieBialgebra superline();

/// n-dimensional object with zero bracket and cobracket, trivial grading.
BraidedLieBialgebra zero_example(std::size_t n);

/// Example: X = U (x) U* with bracket m_X - m_X C (m_X = id (x) ev (x) id),
/// Y = U* (x) U with cobracket Delta_Y - C Delta_Y (Delta_Y = id (x) coev (x) id).
struct MatrixExample {
  BraidedLieAlgebra x;       // (X, [,]_X)
  BraidedLieCoalgebra y;     // (Y, delta_Y)
  BraidedLieBialgebra xy;    // X (+) Y with [,] = [,]_X, delta = delta_Y
  Morphism unit;             // eta_X = coev_U : I -> X
  Morphism multiplication;   // m_X : X (x) X -> X
};
MatrixExample build_matrix_example(const GradedObject& u);

/// Quantum linear space data (Example-4.9-style): skew-commuting nilpotent
/// generators over a finite abelian group grading.
struct QLSSpec {
  GroupData group;
  std::vector<GroupElement> degrees;    // g_i
  std::vector<Character> characters;    // chi_i
  std::vector<long> orders;             // N_i = order of chi_i(g_i), each > 1
  /// strict mode enforces chi_i(g_j) chi_j(g_i) = 1 only for i != j (the
  /// usual literature reading); extraction of A, H then additionally
  /// requires the braiding to be symmetric on the carrier.
  bool strict = false;

  std::size_t theta() const { return degrees.size(); }
  void validate() const;  // throws InvalidSpec
};

struct QuantumLinearSpace {
  GradedObject object;       // monomial basis x^a, a_i < N_i
  Morphism product;          // braided product with x_i^{N_i} = 0
  Morphism coproduct;        // multiplicative from primitive generators
  Morphism unit;             // I -> U
  Morphism counit;           // U -> I
  BraidedLieBialgebra a;     // (U, m - m C, 0)
  BraidedLieBialgebra h;     // (U, 0, Delta - C Delta)
};
QuantumLinearSpace build_quantum_linear_space(const QLSSpec& spec);

/// Library bundle: the regression corpus entry for a named example.
struct ExampleBundle {
  std::string name;
  BraidedLieBialgebra bialgebra;
  std::optional<RMatrix> r_matrix;
  std::vector<std::string> axioms;  // the axioms this bundle is expected to pass
};
std::vector<std::string> example_names();
ExampleBundle example_library(const std::string& name);

}  // namespace brlie
