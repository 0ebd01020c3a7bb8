#include <doctest.h>

#include "brlie/axioms.hpp"
#include "brlie/examples_lib.hpp"

using namespace brlie;

TEST_CASE("parse and print round-trip") {
  const char* samples[] = {
      "comp(bracket_A, braid(A, A))",
      "add(id(A), braid(A, A))",
      "comp(bracket_A, tensor(id(A), bracket_A))",
      "scale(1/2, tensor(ev(H), coev(H)))",
      "neg(comp(phi, alpha))",
      "zero(H, H -> H)",
      "zero(I -> H, H)",
      "tensor(id(H*), inverse_braid(H, H*))",
  };
  for (const char* s : samples) {
    ExprPtr e = parse_diagram(s);
    ExprPtr again = parse_diagram(print_diagram(e));
    CHECK(expr_equal(e, again));
  }
  // whitespace-insensitive
  CHECK(expr_equal(parse_diagram("comp( bracket_A ,braid(A,A) )"),
                   parse_diagram("comp(bracket_A, braid(A, A))")));
  // sub desugars to add/neg
  CHECK(expr_equal(parse_diagram("sub(id(A), braid(A,A))"),
                   parse_diagram("add(id(A), neg(braid(A, A)))")));
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_AS(parse_diagram("comp(bracket_A"), SyntaxError);
  CHECK_THROWS_AS(parse_diagram("comp(bracket_A,)"), SyntaxError);
  CHECK_THROWS_AS(parse_diagram("frob(id(A), id(A))"), SyntaxError);
  CHECK_THROWS_AS(parse_diagram("id(A) trailing"), SyntaxError);
}

TEST_CASE("signature inference") {
  const auto& sigs = standard_generator_signatures();
  SymSig s = infer_signature(parse_diagram("comp(bracket_A, tensor(id(A), bracket_A))"), sigs);
  CHECK(s == SymSig{{"A", "A", "A"}, {"A"}});
  CHECK(infer_signature(parse_diagram("coev(H)"), sigs) == SymSig{{}, {"H", "H*"}});
  CHECK(infer_signature(parse_diagram("ev(H)"), sigs) == SymSig{{"H*", "H"}, {}});
  CHECK_THROWS_AS(infer_signature(parse_diagram("comp(phi, beta)"), sigs), TypeError);
  CHECK(infer_signature(parse_diagram("comp(alpha, phi)"), sigs) == SymSig{{"A"}, {"A"}});
  CHECK_THROWS_AS(infer_signature(parse_diagram("add(alpha, beta)"), sigs), TypeError);
  CHECK_THROWS_AS(infer_signature(parse_diagram("nosuch"), sigs), UnboundGenerator);
}

TEST_CASE("evaluation basics") {
  GradedObject a = plain_object("A", {"v"});
  Env env;
  env.objects["A"] = a;
  CHECK(evaluate(parse_diagram("id(A)"), env) == Morphism::identity({a}));
  // 1-dim trivial A: add(id, braid) evaluates to 2 id
  Morphism two_id = evaluate(parse_diagram("add(id(A, A), braid(A, A))"), env);
  CHECK(two_id == scale(Scalar::integer(2), Morphism::identity({a, a})));
  // coev on a 1-dim H is the 1x1 unit vector
  env.objects["H"] = plain_object("H", {"w"});
  Morphism cv = evaluate(parse_diagram("coev(H)"), env);
  CHECK(cv.entry(0, 0) == Scalar::one());
  CHECK(cv.cod_dim() == 1);
}

TEST_CASE("evaluation is compositional") {
  BraidedLieBialgebra sl2 = sl2_quasitriangular().bialgebra;
  Env env = sl2.env();
  ExprPtr f = parse_diagram("bracket_H");
  ExprPtr g = parse_diagram("braid(H, H)");
  CHECK(evaluate(make_comp({f, g}), env) == compose(evaluate(f, env), evaluate(g, env)));
  CHECK(evaluate(make_tensor({f, g}), env) == tensor(evaluate(f, env), evaluate(g, env)));
  CHECK(evaluate(make_add({g, g}), env) ==
        add(evaluate(g, env), evaluate(g, env)));
  CHECK(evaluate(make_scale(Rational(1, 3), g), env) ==
        scale(Scalar::rational(Rational(1, 3)), evaluate(g, env)));
}

TEST_CASE("L1 lhs vanishes on sl2 through the engine") {
  BraidedLieBialgebra sl2 = sl2_quasitriangular().bialgebra;
  Env env = sl2.env();
  Morphism m = evaluate(
      parse_diagram("comp(bracket_H, add(tensor(id(H), id(H)), braid(H, H)))"), env);
  CHECK(m.is_zero());
}

TEST_CASE("mirror maps left axioms to right axioms") {
  CHECK(expr_equal(mirror_diagram(axiom("M1").lhs), axiom("M2").lhs));
  CHECK(expr_equal(mirror_diagram(axiom("M1").rhs), axiom("M2").rhs));
  CHECK(expr_equal(mirror_diagram(axiom("CM1").lhs), axiom("CM2").lhs));
  CHECK(expr_equal(mirror_diagram(axiom("CM1").rhs), axiom("CM2").rhs));
  CHECK(expr_equal(mirror_diagram(axiom("B1").lhs), axiom("B2").lhs));
  CHECK(expr_equal(mirror_diagram(axiom("B1").rhs), axiom("B2").rhs));
  CHECK(expr_equal(mirror_diagram(axiom("B3").lhs), axiom("B4").lhs));
  CHECK(expr_equal(mirror_diagram(axiom("B3").rhs), axiom("B4").rhs));
  CHECK(expr_equal(mirror_diagram(axiom("YD-left").lhs), axiom("YD-right").lhs));
  CHECK(expr_equal(mirror_diagram(axiom("YD-left").rhs), axiom("YD-right").rhs));
  // mirroring twice is the identity
  CHECK(expr_equal(mirror_diagram(mirror_diagram(axiom("SLB").rhs)), axiom("SLB").rhs));
}

TEST_CASE("infinitesimal braiding vanishes when phi or alpha is zero") {
  BraidedLieBialgebra b2 = borel2();
  BraidedLieBialgebra h = borel2();
  h.object.name = "H";
  GradedObject a_obj = b2.object;
  a_obj.name = "A";

  Env env;
  env.objects["A"] = a_obj;
  env.objects["H"] = h.object;
  // alpha nonzero, phi = 0
  std::map<Index, Morphism::Column> act;
  act[0 * 2 + 1][1] = Scalar::one();  // x |> y = y
  env.generators["alpha"] = Morphism::make({h.object, a_obj}, {a_obj}, std::move(act));
  env.generators["phi"] = Morphism::zero({a_obj}, {h.object, a_obj});
  CHECK(compute_infinitesimal_braiding(env).is_zero());
  // phi nonzero, alpha = 0
  std::map<Index, Morphism::Column> co;
  co[1][0 * 2 + 1] = Scalar::one();  // phi(y) = x (x) y
  env.generators["phi"] = Morphism::make({a_obj}, {h.object, a_obj}, std::move(co));
  env.generators["alpha"] = Morphism::zero({h.object, a_obj}, {a_obj});
  CHECK(compute_infinitesimal_braiding(env).is_zero());
}
