#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "brlie/morphism.hpp"

namespace brlie {

struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};
struct TypeError : Error {
  using Error::Error;
};
struct UnboundGenerator : Error {
  using Error::Error;
};

/// Tangle expression AST. Object names are symbolic ("A", "H", "H*", ...);
/// they bind to concrete GradedObjects through an Env at evaluation time.
struct DiagramExpr;
using ExprPtr = std::shared_ptr<const DiagramExpr>;

struct DiagramExpr {
  enum class Kind {
    Generator,      // named morphism from the environment
    Id,             // id(X)
    Braid,          // braid(X,Y): X(x)Y -> Y(x)X
    InverseBraid,   // inverse_braid(X,Y): X(x)Y -> Y(x)X
    Ev,             // ev(X): X*(x)X -> I
    Coev,           // coev(X): I -> X(x)X*
    Zero,           // zero(X,... -> Y,...)  (I denotes the empty word)
    Comp,           // comp(f1,...,fk) = f1 o ... o fk (fk applied first)
    Tensor,         // tensor(f1,...,fk)
    Add,            // add(f1,...,fk)
    Scale,          // scale(q, f), q a rational literal
    Neg,            // neg(f)
  };

  Kind kind;
  std::string name;                   // Generator
  std::vector<std::string> objs;      // Id/Braid/InverseBraid/Ev/Coev
  std::vector<std::string> zero_dom;  // Zero
  std::vector<std::string> zero_cod;
  std::vector<ExprPtr> args;
  Rational factor{0};                 // Scale
};

ExprPtr make_generator(std::string name);
ExprPtr make_id(std::string obj);
ExprPtr make_braid(std::string x, std::string y);
ExprPtr make_inverse_braid(std::string x, std::string y);
ExprPtr make_ev(std::string obj);
ExprPtr make_coev(std::string obj);
ExprPtr make_zero(std::vector<std::string> dom, std::vector<std::string> cod);
ExprPtr make_comp(std::vector<ExprPtr> args);
ExprPtr make_tensor(std::vector<ExprPtr> args);
ExprPtr make_add(std::vector<ExprPtr> args);
ExprPtr make_sub(ExprPtr a, ExprPtr b);
ExprPtr make_scale(Rational q, ExprPtr e);
ExprPtr make_neg(ExprPtr e);

/// Symbolic signature over object names.
struct SymSig {
  std::vector<std::string> dom, cod;
  bool operator==(const SymSig&) const = default;
};
std::string sig_str(const SymSig& s);

/// Grammar:
///   expr := comp(expr, expr, ...) | tensor(...) | add(...) | sub(e1, e2)
///         | scale(RATIONAL, expr) | neg(expr)
///         | id(OBJ) | braid(OBJ, OBJ) | inverse_braid(OBJ, OBJ)
///         | ev(OBJ) | coev(OBJ) | zero(OBJLIST -> OBJLIST) | NAME
///   OBJ := NAME '*'*     OBJLIST := 'I' | OBJ (',' OBJ)*
/// Whitespace-insensitive. sub(a, b) parses to add(a, neg(b)).
ExprPtr parse_diagram(const std::string& text);
std::string print_diagram(const ExprPtr& e);

/// Structural equality of ASTs (after sub-desugaring).
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

/// Left-right reflection of a tangle: reverses tensor factors in every row,
/// swaps the A<->H roles (generator suffixes, alpha<->beta, phi<->psi) and
/// reverses braiding arguments. Valid when the braiding is symmetric on the
/// objects involved, which is the standing hypothesis here.
ExprPtr mirror_diagram(const ExprPtr& e);

/// Generator bindings plus object bindings used for evaluation.
struct Env {
  std::map<std::string, GradedObject> objects;
  std::map<std::string, Morphism> generators;

  /// Resolve an object name; trailing '*' builds duals on demand.
  GradedObject object(const std::string& name) const;
  const Morphism& generator(const std::string& name) const;
  bool has_generator(const std::string& name) const { return generators.count(name) > 0; }
};

/// Infer the symbolic signature; generator signatures come from `gen_sigs`.
SymSig infer_signature(const ExprPtr& e, const std::map<std::string, SymSig>& gen_sigs);

/// Canonical symbolic signatures of the standard generator set
/// (bracket_A, cobracket_A, bracket_H, cobracket_H, alpha, beta, phi, psi, R, r).
const std::map<std::string, SymSig>& standard_generator_signatures();

/// Evaluate to an exact Morphism. Structural recursion; compositionality
/// evaluate(comp(e1,e2)) == compose(evaluate(e1), evaluate(e2)) holds by
/// construction.
Morphism evaluate(const ExprPtr& e, const Env& env);

/// The infinitesimal braiding ^SC: A(x)A -> A(x)A, the signed four-term
/// composite of phi, braidings and alpha (two plus terms, two minus terms;
/// each term contains exactly one phi and one alpha).
ExprPtr infinitesimal_braiding_expr();
Morphism compute_infinitesimal_braiding(const Env& env);

}  // namespace brlie
