#include <doctest.h>

#include <random>

#include "brlie/enveloping.hpp"
#include "brlie/examples_lib.hpp"

using namespace brlie;

namespace {

BraidedLieAlgebra abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  GradedObject obj = plain_object("ab" + std::to_string(n), labels);
  return {obj, Morphism::zero({obj, obj}, {obj})};
}

BraidedLieAlgebra lie_of(const BraidedLieBialgebra& b) { return {b.object, b.bracket}; }

struct QdActions {
  BraidedLieAlgebra a, h;
  Morphism alpha, beta;
};

QdActions b2_double_pair() {
  QuantumDouble qd = quantum_double(borel2(), DoubleVariant::CopVariant);
  QdActions out{lie_of(qd.a), lie_of(borel2()),
                compose(qd.dbl.proj_a,
                        compose(qd.dbl.d.bracket, tensor(qd.dbl.inj_h, qd.dbl.inj_a))),
                compose(qd.dbl.proj_h,
                        compose(qd.dbl.d.bracket, tensor(qd.dbl.inj_h, qd.dbl.inj_a)))};
  return out;
}

}  // namespace

TEST_CASE("PBW dimension counts") {
  // abelian 2-dim L, D = 2: dim = 1 + 2 + 3 = 6
  TruncatedEnveloping u2(abelian(2), 2);
  CHECK(u2.dim() == 6);
  for (long n = 1; n <= 4; ++n) {
    TruncatedEnveloping u(abelian(static_cast<size_t>(n)), 3);
    for (long d = 0; d <= 3; ++d) {
      long count = 0;
      for (const auto& m : u.basis())
        if (m.degree() == d) ++count;
      CHECK(count == TruncatedEnveloping::monomials_of_degree(n, d));
    }
  }
  TruncatedEnveloping usl2(lie_of(sl2_quasitriangular().bialgebra), 3);
  CHECK(usl2.dim() == 1 + 3 + 6 + 10);
}

TEST_CASE("b2 straightening: y x = x y - y") {
  TruncatedEnveloping ub2(lie_of(borel2()), 3);
  // letters: x = 0, y = 1; straighten the word (y, x)
  EnvElem got = ub2.straighten({1, 0});
  EnvElem expect;
  expect.add_term(Mono{{1, 1}}, Scalar::one());
  expect.add_term(Mono{{0, 1}}, -Scalar::one());
  CHECK(got == expect);
}

TEST_CASE("i_L is bracket compatible on sl2 at cap 2") {
  BraidedLieAlgebra sl2 = lie_of(sl2_quasitriangular().bialgebra);
  TruncatedEnveloping u(sl2, 2);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      EnvElem lhs = u.lie_bracket(i, j);
      EnvElem rhs = u.multiply(u.include_lie(i), u.include_lie(j)) -
                    u.multiply(u.include_lie(j), u.include_lie(i));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("straightening confluence (diamond property)") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> letter3(0, 2), letter2(0, 1);
  TruncatedEnveloping usl2(lie_of(sl2_quasitriangular().bialgebra), 3);
  TruncatedEnveloping ub2(lie_of(borel2()), 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> w3{letter3(rng), letter3(rng), letter3(rng)};
    CHECK(usl2.straighten(w3, false) == usl2.straighten(w3, true));
    std::vector<int> w2{letter2(rng), letter2(rng), letter2(rng)};
    CHECK(ub2.straighten(w2, false) == ub2.straighten(w2, true));
  }
}

TEST_CASE("filtration: leading terms multiply like the symmetric algebra") {
  TruncatedEnveloping u(lie_of(sl2_quasitriangular().bialgebra), 3);
  std::mt19937 rng(99);
  std::uniform_int_distribution<size_t> pick(0, u.basis().size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const Mono& a = u.basis()[pick(rng)];
    const Mono& b = u.basis()[pick(rng)];
    if (a.degree() + b.degree() > 3) continue;
    EnvElem prod = u.multiply(a, b);
    Mono lead{std::vector<int>(3, 0)};
    for (size_t i = 0; i < 3; ++i) lead.exp[i] = a.exp[i] + b.exp[i];
    REQUIRE(prod.terms.count(lead) == 1);
    CHECK(prod.terms.at(lead) == Scalar::one());
    for (const auto& [m, c] : prod.terms) CHECK(m.degree() <= a.degree() + b.degree());
  }
}

TEST_CASE("out-of-range products are explicit errors") {
  TruncatedEnveloping u(lie_of(borel2()), 2);
  Mono x2{{2, 0}}, x1{{1, 0}};
  CHECK_THROWS_AS(u.multiply(x2, x1), OutOfRange);
  CHECK_THROWS_AS(u.straighten({0, 0, 0}), OutOfRange);
}

TEST_CASE("coproduct on monomials") {
  TruncatedEnveloping u(abelian(1), 3);
  // Delta(a^2) = a^2 (x) 1 + 2 a (x) a + 1 (x) a^2
  EnvElem2 d = u.coproduct(Mono{{2}});
  CHECK(d.size() == 3);
  CHECK(d.at({Mono{{2}}, Mono{{0}}}) == Scalar::one());
  CHECK(d.at({Mono{{1}}, Mono{{1}}}) == Scalar::integer(2));
  CHECK(d.at({Mono{{0}}, Mono{{2}}}) == Scalar::one());
  CHECK(u.counit(u.include_lie(0)) == Scalar::zero());
}

TEST_CASE("nontrivial grading is rejected") {
  BraidedLieBialgebra sl = superline();
  CHECK_THROWS_AS(TruncatedEnveloping(lie_of(sl), 3), UnsupportedCategory);
}

TEST_CASE("trivial actions give the tensor-product algebra") {
  BraidedLieAlgebra a = abelian(1), h = lie_of(borel2());
  Morphism alpha = zero_alpha(a.object, h.object);
  Morphism beta = zero_beta(a.object, h.object);
  TruncatedDoubleCrossProduct prod(a, h, alpha, beta, 3);
  // product of (a (x) 1) and (1 (x) y) in both orders agrees with the plain
  // tensor algebra
  Mono one_a = TruncatedEnveloping::unit_mono(1), one_h = TruncatedEnveloping::unit_mono(2);
  Mono ga = Mono{{1}};
  Mono gy = Mono{{0, 1}};
  EnvElem2 p = prod.multiply(ga, one_h, one_a, gy);
  REQUIRE(p.size() == 1);
  CHECK(p.at({ga, gy}) == Scalar::one());
  EnvElem2 q = prod.multiply(one_a, gy, ga, one_h);
  REQUIRE(q.size() == 1);
  CHECK(q.at({ga, gy}) == Scalar::one());
}

TEST_CASE("extension requires a matched pair") {
  BraidedLieAlgebra a = abelian(1), h = lie_of(borel2());
  // alpha(x (x) a) = a, alpha(y (x) a) = a violates (M2)-compatibility with
  // beta = 0 ([x,y] |> a should be x |> (y |> a) - ... ); precondition throws
  std::map<Index, Morphism::Column> e;
  e[0][0] = Scalar::one();
  e[1][0] = Scalar::one();
  Morphism alpha = Morphism::make({h.object, a.object}, {a.object}, std::move(e));
  Morphism beta = zero_beta(a.object, h.object);
  CHECK_THROWS_AS(TruncatedDoubleCrossProduct(a, h, alpha, beta, 3), PreconditionViolation);
}

TEST_CASE("b2 double pair: extension, associativity, restriction round trip") {
  QdActions pair = b2_double_pair();
  TruncatedDoubleCrossProduct prod(pair.a, pair.h, pair.alpha, pair.beta, 3);

  // degree-1 restriction recovers alpha and beta exactly
  CHECK(same_entries(prod.restricted_alpha(), pair.alpha));
  CHECK(same_entries(prod.restricted_beta(), pair.beta));
  RestrictedPair restricted = restrict_matched_pair(pair.a, pair.h, prod);
  CHECK(same_entries(restricted.alpha, pair.alpha));
  CHECK(same_entries(restricted.beta, pair.beta));
  for (const auto& r : restricted.matched_pair_reports) {
    INFO(r.axiom);
    CHECK(r.passed);
  }

  // associativity on all basis triples of total degree <= 3
  const auto& ua = prod.left();
  const auto& uh = prod.right();
  std::vector<std::pair<Mono, Mono>> basis_pairs;
  for (const auto& ma : ua.basis())
    for (const auto& mh : uh.basis())
      if (ma.degree() + mh.degree() <= 3) basis_pairs.emplace_back(ma, mh);
  auto sub2 = [](EnvElem2 u, const EnvElem2& v) {
    for (const auto& [k, c] : v) {
      auto [it, ins] = u.try_emplace(k, -c);
      if (!ins) it->second -= c;
    }
    for (auto it = u.begin(); it != u.end();)
      it = it->second.is_zero() ? u.erase(it) : std::next(it);
    return u;
  };
  int checked = 0;
  for (const auto& [a1, x1] : basis_pairs)
    for (const auto& [a2, x2] : basis_pairs)
      for (const auto& [a3, x3] : basis_pairs) {
        const int total = a1.degree() + x1.degree() + a2.degree() + x2.degree() +
                          a3.degree() + x3.degree();
        if (total > 3) continue;
        EnvElem2 left = prod.multiply(prod.multiply(a1, x1, a2, x2), {{{a3, x3}, Scalar::one()}});
        EnvElem2 right = prod.multiply({{{a1, x1}, Scalar::one()}}, prod.multiply(a2, x2, a3, x3));
        if (!sub2(left, right).empty()) {
          CAPTURE(a1.degree());
          FAIL_CHECK("associativity violated");
        }
        ++checked;
      }
  CHECK(checked > 100);
}

TEST_CASE("enveloping isomorphism checks") {
  // alpha = beta = 0, A = H = 1-dim: all four checks pass
  {
    BraidedLieAlgebra a = abelian(1);
    GradedObject hobj = plain_object("H1", {"w"});
    BraidedLieAlgebra h{hobj, Morphism::zero({hobj, hobj}, {hobj})};
    IsoReport iso = verify_env_isomorphism(a, h, zero_alpha(a.object, hobj),
                                           zero_beta(a.object, hobj), 3);
    CHECK(iso.bracket_compatible);
    CHECK(iso.coalgebra_compatible);
    CHECK(iso.dimensions_match);
    CHECK(iso.tensor_algebra_identified);
    CHECK(iso.injective_on_generators);
    CHECK(iso.all(true));
  }
  // alpha = beta = 0 with nonabelian pieces
  {
    BraidedLieAlgebra a = lie_of(borel2());
    GradedObject a_obj = a.object;
    a_obj.name = "Ab2";
    a = BraidedLieAlgebra{a_obj, Morphism::make({a_obj, a_obj}, {a_obj}, a.bracket.entries())};
    BraidedLieAlgebra h = lie_of(sl2_quasitriangular().bialgebra);
    IsoReport iso = verify_env_isomorphism(a, h, zero_alpha(a.object, h.object),
                                           zero_beta(a.object, h.object), 3);
    CHECK(iso.all(true));
  }
  // b2 |><| b2*cop at D = 3: checks (i)-(iii)
  {
    QdActions pair = b2_double_pair();
    IsoReport iso = verify_env_isomorphism(pair.a, pair.h, pair.alpha, pair.beta, 3);
    CHECK(iso.bracket_compatible);
    CHECK(iso.coalgebra_compatible);
    CHECK(iso.dimensions_match);
    CHECK(iso.injective_on_generators);
  }
}
