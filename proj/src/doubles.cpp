#include "brlie/doubles.hpp"

namespace brlie {

namespace {

Env dual_env(const BraidedLieBialgebra& h) {
  Env env = h.env();
  env.objects["Hs"] = dual_object(h.object);
  return env;
}

}  // namespace

BraidedLieBialgebra dual_bialgebra(const BraidedLieBialgebra& h, DualTwist twist) {
  const Env env = dual_env(h);
  // [f, g]_{H*} pairs f and g against the two legs of delta_H under a coev
  // loop; delta_{H*} pairs f against [,]_H under two coev loops.
  static const ExprPtr bracket_expr = parse_diagram(
      "comp(tensor(ev(H), ev(H), id(H*)),"
      "     tensor(id(H*), braid(H*,H), id(H), id(H*)),"
      "     tensor(id(H*), id(H*), cobracket_H, id(H*)),"
      "     tensor(id(H*), id(H*), coev(H)))");
  static const ExprPtr cobracket_expr = parse_diagram(
      "comp(tensor(ev(H), id(H*), id(H*)),"
      "     tensor(id(H*), bracket_H, id(H*), id(H*)),"
      "     tensor(id(H*), id(H), braid(H*,H), id(H*)),"
      "     tensor(id(H*), coev(H), coev(H)))");
  Morphism bracket = evaluate(bracket_expr, env);
  Morphism cobracket = evaluate(cobracket_expr, env);
  if (twist == DualTwist::Op) bracket = neg(bracket);
  if (twist == DualTwist::Cop) cobracket = neg(cobracket);
  return {dual_object(h.object), std::move(bracket), std::move(cobracket)};
}

QuantumDouble quantum_double(const BraidedLieBialgebra& h, DoubleVariant variant) {
  QuantumDouble out;
  const GradedObject hs = dual_object(h.object);
  const Morphism c_h_hs = braiding(h.object, hs);  // H (x) H* -> H* (x) H

  Morphism alpha, beta;
  if (variant == DoubleVariant::OpVariant) {
    out.a = dual_bialgebra(h, DualTwist::Op);
    // beta = (id_H (x) ev)(id_H (x) C_{H,H*})(delta_H (x) id): H (x) A -> H
    beta = compose(tensor(Morphism::identity({h.object}), evaluation(h.object)),
                   compose(tensor(Morphism::identity({h.object}), c_h_hs),
                           tensor(h.cobracket, Morphism::identity({hs}))));
    // alpha = (id (x) ev)(id (x) C)(C (x) id)(id_H (x) delta_{H*op})
    alpha = compose(
        tensor(Morphism::identity({hs}), evaluation(h.object)),
        compose(tensor(Morphism::identity({hs}), c_h_hs),
                compose(tensor(c_h_hs, Morphism::identity({hs})),
                        tensor(Morphism::identity({h.object}), out.a.cobracket))));
    // R = C_{H,H*} coev_H lands in A (x) H.
    Morphism r0 = compose(c_h_hs, coevaluation(h.object));
    out.r_matrix.element = r0;  // embedded below
  } else {
    out.a = dual_bialgebra(h, DualTwist::Cop);
    // beta = (ev (x) id_H)(C_{H,H*} (x) id_H)(id_H (x) C_{H,H*})(delta_H (x) id)
    beta = compose(
        tensor(evaluation(h.object), Morphism::identity({h.object})),
        compose(tensor(c_h_hs, Morphism::identity({h.object})),
                compose(tensor(Morphism::identity({h.object}), c_h_hs),
                        tensor(h.cobracket, Morphism::identity({hs})))));
    // alpha = (ev (x) id)(C_{H,H*} (x) id)(id_H (x) delta_{H*cop})
    alpha = compose(tensor(evaluation(h.object), Morphism::identity({hs})),
                    compose(tensor(c_h_hs, Morphism::identity({hs})),
                            tensor(Morphism::identity({h.object}), out.a.cobracket)));
    // R = coev_H lands in H (x) A.
    out.r_matrix.element = coevaluation(h.object);
  }

  DoubleBicrosssumSpec spec;
  spec.a = out.a;
  spec.h = h;
  spec.actions = ActionData::zero(out.a.object, h.object);
  spec.actions.alpha = std::move(alpha);
  spec.actions.beta = std::move(beta);
  spec.variant = Variant::Bicrosssum;
  out.theorem = verify_main_theorem(spec);
  out.dbl = build_double_bicrosssum(spec);

  // Embed R into D (x) D through the injections.
  if (variant == DoubleVariant::OpVariant) {
    out.r_matrix.element =
        compose(tensor(out.dbl.inj_a, out.dbl.inj_h), out.r_matrix.element);
  } else {
    out.r_matrix.element =
        compose(tensor(out.dbl.inj_h, out.dbl.inj_a), out.r_matrix.element);
  }
  return out;
}

std::vector<CheckReport> check_rmatrix(const BraidedLieBialgebra& h, const RMatrix& r,
                                       const std::vector<std::string>& which) {
  Env env = h.env();
  env.generators["R"] = r.element;
  std::vector<std::string> ids;
  for (const auto& w : which) {
    if (w == "COB" || w == "CYBE" || w == "CYBE-I" || w == "CYBE-II") ids.push_back(w);
    else throw Error("check_rmatrix: unknown condition " + w);
  }
  return check_all(env, ids);
}

std::vector<CheckReport> check_cormatrix(const BraidedLieBialgebra& h, const CoRMatrix& r,
                                         const std::vector<std::string>& which) {
  Env env = h.env();
  env.generators["r"] = r.form;
  std::vector<std::string> ids;
  for (const auto& w : which) {
    if (w == "Bo" || w == "CCYBE" || w == "CCYBE-I" || w == "CCYBE-II") ids.push_back(w);
    else throw Error("check_cormatrix: unknown condition " + w);
  }
  return check_all(env, ids);
}

CoRMatrix transport_r_matrix(const GradedObject& h, const RMatrix& r) {
  const GradedObject hs = dual_object(h);
  const Morphism id_hs = Morphism::identity({hs});
  Morphism form = compose(
      tensor(evaluation(h), evaluation(h)),
      compose(tensor(id_hs, tensor(braiding(hs, h), Morphism::identity({h}))),
              tensor(tensor(id_hs, id_hs), r.element)));
  return CoRMatrix{std::move(form)};
}

RMatrix transport_cormatrix(const GradedObject& x, const CoRMatrix& r) {
  const GradedObject xs = dual_object(x);
  const Morphism id_xs = Morphism::identity({xs});
  Morphism vec = compose(
      tensor(r.form, tensor(id_xs, id_xs)),
      compose(tensor(Morphism::identity({x}), tensor(braiding(xs, x), id_xs)),
              tensor(coevaluation(x), coevaluation(x))));
  return RMatrix{std::move(vec)};
}

BosonisationResult bosonise_from_R(const BraidedLieBialgebra& h, const RMatrix& r,
                                   const BraidedLieBialgebra& a, const Morphism& alpha) {
  BosonisationResult out;
  const Morphism id_a = Morphism::identity({a.object});
  out.induced = compose(tensor(Morphism::identity({h.object}), alpha),
                        compose(tensor(braiding(h.object, h.object), id_a),
                                tensor(r.element, id_a)));
  out.spec.a = a;
  out.spec.h = h;
  out.spec.actions = ActionData::zero(a.object, h.object);
  out.spec.actions.alpha = alpha;
  out.spec.actions.phi = out.induced;
  out.spec.variant = Variant::BisumLeft;

  PairBundle bundle{out.spec.a, out.spec.h, out.spec.effective_actions()};
  out.diagnostics = check_all(bundle.env(), {"COMOD", "YD-left", "SLB"});
  return out;
}

BosonisationResult bosonise_from_r(const BraidedLieBialgebra& h, const CoRMatrix& r,
                                   const BraidedLieBialgebra& a, const Morphism& phi) {
  BosonisationResult out;
  const Morphism id_a = Morphism::identity({a.object});
  out.induced = compose(tensor(r.form, id_a),
                        compose(tensor(braiding(h.object, h.object), id_a),
                                tensor(Morphism::identity({h.object}), phi)));
  out.spec.a = a;
  out.spec.h = h;
  out.spec.actions = ActionData::zero(a.object, h.object);
  out.spec.actions.phi = phi;
  out.spec.actions.alpha = out.induced;
  out.spec.variant = Variant::BisumLeft;

  PairBundle bundle{out.spec.a, out.spec.h, out.spec.effective_actions()};
  out.diagnostics = check_all(bundle.env(), {"MOD", "YD-left", "SLB"});
  return out;
}

}  // namespace brlie
