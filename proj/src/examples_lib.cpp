#include "brlie/examples_lib.hpp"

namespace brlie {

GradedObject plain_object(const std::string& name, const std::vector<std::string>& labels) {
  GradedObject obj;
  obj.name = name;
  obj.group = GroupData{};
  for (const auto& l : labels) obj.basis.push_back(BasisVector{l, GroupElement{}, Character{}});
  obj.validate();
  return obj;
}

Sl2Quasitriangular sl2_quasitriangular() {
  GradedObject obj = plain_object("sl2", {"e", "h", "f"});
  const Index e = 0, h = 1, f = 2;
  const Scalar one = Scalar::one(), two = Scalar::integer(2);
  std::map<Index, Morphism::Column> b;
  b[h * 3 + e][e] = two;
  b[e * 3 + h][e] = -two;
  b[h * 3 + f][f] = -two;
  b[f * 3 + h][f] = two;
  b[e * 3 + f][h] = one;
  b[f * 3 + e][h] = -one;
  Morphism bracket = Morphism::make({obj, obj}, {obj}, std::move(b));

  // R = e (x) f + 1/4 h (x) h
  std::map<Index, Morphism::Column> rentries;
  rentries[0][e * 3 + f] = one;
  rentries[0][h * 3 + h] = Scalar::rational(Rational(1, 4));
  Morphism r = Morphism::make({}, {obj, obj}, std::move(rentries));

  // delta = dR: delta(x) = (ad_x (x) id + id (x) ad_x)(R), from the adjoint
  // representation matrices.
  std::map<Index, Morphism::Column> d;
  for (Index x = 0; x < 3; ++x) {
    Morphism::Column col;
    for (const auto& [rc, rv] : r.entries().at(0)) {
      const Index r1 = rc / 3, r2 = rc % 3;
      for (const auto& [k, c] : bracket.apply(x * 3 + r1)) {
        auto [it, ins] = col.try_emplace(k * 3 + r2, rv * c);
        if (!ins) it->second += rv * c;
      }
      for (const auto& [k, c] : bracket.apply(x * 3 + r2)) {
        auto [it, ins] = col.try_emplace(r1 * 3 + k, rv * c);
        if (!ins) it->second += rv * c;
      }
    }
    for (auto it = col.begin(); it != col.end();)
      it = it->second.is_zero() ? col.erase(it) : std::next(it);
    if (!col.empty()) d[x] = std::move(col);
  }
  Morphism cobracket = Morphism::make({obj}, {obj, obj}, std::move(d));
  return {BraidedLieBialgebra{obj, std::move(bracket), std::move(cobracket)}, RMatrix{r}};
}

BraidedLieBialgebra borel2() {
  GradedObject obj = plain_object("b2", {"x", "y"});
  const Index x = 0, y = 1;
  std::map<Index, Morphism::Column> b;
  b[x * 2 + y][y] = Scalar::one();
  b[y * 2 + x][y] = -Scalar::one();
  std::map<Index, Morphism::Column> d;
  d[y][x * 2 + y] = Scalar::one();
  d[y][y * 2 + x] = -Scalar::one();
  return {obj, Morphism::make({obj, obj}, {obj}, std::move(b)),
          Morphism::make({obj}, {obj, obj}, std::move(d))};
}

BraidedLieBialgebra superline() {
  GradedObject obj;
  obj.name = "superline";
  obj.group = GroupData{{2}};
  obj.basis.push_back(BasisVector{"x", GroupElement{{1}}, Character{{1}}});
  obj.basis.push_back(BasisVector{"y", GroupElement{{0}}, Character{{0}}});
  obj.validate();
  std::map<Index, Morphism::Column> b;
  b[0][1] = Scalar::one();  // [x, x] = y
  return {obj, Morphism::make({obj, obj}, {obj}, std::move(b)),
          Morphism::zero({obj}, {obj, obj})};
}

BraidedLieBialgebra zero_example(std::size_t n) {
  std::vector<std::string> labels;
  for (size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
  return BraidedLieBialgebra::zero_structure(plain_object("zero" + std::to_string(n), labels));
}

MatrixExample build_matrix_example(const GradedObject& u) {
  if (!is_symmetric_on({u, dual_object(u)}))
    throw ShapeError("matrix example requires the braiding symmetric on {U, U*}");
  MatrixExample out;
  Env env;
  env.objects["U"] = u;

  // X = U (x) U*: carried as a single object whose basis is the tensor basis,
  // so X can act as a bracket carrier for the axiom checkers.
  const GradedObject us = dual_object(u);
  GradedObject x;
  x.name = u.name + "(x)" + u.name + "*";
  x.group = u.group;
  for (const auto& bu : u.basis)
    for (const auto& bs : us.basis)
      x.basis.push_back(BasisVector{bu.label + "." + bs.label,
                                    group_add(u.group, bu.degree, bs.degree),
                                    group_add(u.group, bu.character, bs.character)});
  x.validate();
  GradedObject y;
  y.name = u.name + "*(x)" + u.name;
  y.group = u.group;
  for (const auto& bs : us.basis)
    for (const auto& bu : u.basis)
      y.basis.push_back(BasisVector{bs.label + "." + bu.label,
                                    group_add(u.group, bs.degree, bu.degree),
                                    group_add(u.group, bs.character, bu.character)});
  y.validate();

  // m_X = id_U (x) ev_U (x) id_{U*} under the identification above; indices
  // of X (x) X split as (i, j, k, l) with m(e_i e^j e_k e^l) = delta_jk e_i e^l.
  const Index n = u.dim();
  std::map<Index, Morphism::Column> me;
  const Index nx = n * n;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index l = 0; l < n; ++l)
        me[(i * n + j) * nx + (j * n + l)][i * n + l] = Scalar::one();
  out.multiplication = Morphism::make({x, x}, {x}, std::move(me));

  std::map<Index, Morphism::Column> ue;
  for (Index i = 0; i < n; ++i) ue[0][i * n + i] = Scalar::one();
  out.unit = Morphism::make({}, {x}, std::move(ue));

  Morphism c_xx = braiding(x, x);
  Morphism bracket_x = sub(out.multiplication, compose(out.multiplication, c_xx));
  out.x = BraidedLieAlgebra{x, bracket_x};

  // Delta_Y = id_{U*} (x) coev_U (x) id_U: Delta(e^j e_i) =
  // sum_k (e^j e_k) (x) (e^k e_i).
  std::map<Index, Morphism::Column> de;
  const Index ny = n * n;
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i)
      for (Index k = 0; k < n; ++k)
        de[j * n + i][(j * n + k) * ny + (k * n + i)] = Scalar::one();
  Morphism delta_y = Morphism::make({y}, {y, y}, std::move(de));
  Morphism cobracket_y = sub(delta_y, compose(braiding(y, y), delta_y));
  out.y = BraidedLieCoalgebra{y, cobracket_y};

  // X (+) Y with [,] = [,]_X and delta = delta_Y.
  DoubleBicrosssumSpec spec;
  spec.a = BraidedLieBialgebra{x, bracket_x, Morphism::zero({x}, {x, x})};
  spec.h = BraidedLieBialgebra{y, Morphism::zero({y, y}, {y}), cobracket_y};
  spec.actions = ActionData::zero(x, y);
  spec.variant = Variant::DirectSum;
  out.xy = build_double_bicrosssum(spec).d;
  return out;
}

void QLSSpec::validate() const {
  group.validate();
  const size_t t = theta();
  if (characters.size() != t || orders.size() != t)
    throw InvalidSpec("g, chi, N must have equal lengths");
  for (size_t i = 0; i < t; ++i) {
    for (size_t j = 0; j < t; ++j) {
      if (strict && i == j) continue;
      Scalar q = pairing(group, characters[i], degrees[j]) *
                 pairing(group, characters[j], degrees[i]);
      if (!q.is_one())
        throw InvalidSpec("chi_i(g_j) chi_j(g_i) = 1 fails at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
    }
    // N_i = order of chi_i(g_i), required > 1.
    Scalar q = pairing(group, characters[i], degrees[i]);
    Scalar p = Scalar::one();
    long order = 0;
    for (long k = 1; k <= group.conductor() + 1; ++k) {
      p = p * q;
      if (p.is_one()) {
        order = k;
        break;
      }
    }
    if (order != orders[i])
      throw InvalidSpec("N_" + std::to_string(i + 1) + " does not match the order of chi_i(g_i)");
    if (orders[i] <= 1) throw InvalidSpec("1 < N_i required");
  }
}

namespace {

struct QlsBasis {
  std::vector<std::vector<long>> exponents;  // a with a_i < N_i, sorted
  std::map<std::vector<long>, Index> index;
};

QlsBasis qls_basis(const QLSSpec& spec) {
  QlsBasis out;
  std::vector<long> a(spec.theta(), 0);
  while (true) {
    out.exponents.push_back(a);
    size_t i = 0;
    while (i < a.size()) {
      if (++a[i] < spec.orders[i]) break;
      a[i] = 0;
      ++i;
    }
    if (i == a.size()) break;
    if (a.empty()) break;
  }
  std::sort(out.exponents.begin(), out.exponents.end());
  for (Index i = 0; i < out.exponents.size(); ++i) out.index[out.exponents[i]] = i;
  return out;
}

}  // namespace

QuantumLinearSpace build_quantum_linear_space(const QLSSpec& spec) {
  spec.validate();
  QuantumLinearSpace out;
  const QlsBasis basis = qls_basis(spec);
  const size_t theta = spec.theta();

  GradedObject obj;
  obj.name = "qls";
  obj.group = spec.group;
  for (const auto& a : basis.exponents) {
    GroupElement deg = group_identity(spec.group);
    Character chi = group_identity(spec.group);
    std::string label = "1";
    bool first = true;
    for (size_t i = 0; i < theta; ++i) {
      for (long k = 0; k < a[i]; ++k) {
        deg = group_add(spec.group, deg, spec.degrees[i]);
        chi = group_add(spec.group, chi, spec.characters[i]);
      }
      if (a[i] > 0) {
        if (first) label.clear();
        if (!first) label += "*";
        label += "x" + std::to_string(i + 1);
        if (a[i] > 1) label += "^" + std::to_string(a[i]);
        first = false;
      }
    }
    obj.basis.push_back(BasisVector{label, deg, chi});
  }
  obj.validate();
  out.object = obj;

  // Product of monomials: sort the concatenated word x^a x^b into normal
  // order, collecting the braiding factor chi_j(g_i) for every transposition
  // of x_i past x_j with i > j; truncate on x_i^{N_i}.
  auto mono_product = [&](const std::vector<long>& a,
                          const std::vector<long>& b) -> std::pair<Scalar, std::vector<long>> {
    Scalar coeff = Scalar::one(spec.group.conductor());
    std::vector<long> c(theta, 0);
    for (size_t i = 0; i < theta; ++i) {
      // move each x_i of b leftwards past the x_j of a with j > i
      long crossings = 0;
      for (size_t j = i + 1; j < theta; ++j) crossings += a[j];
      if (b[i] > 0 && crossings > 0) {
        // q factor: each of the b[i] letters crosses each of the a_j (j>i)
        // letters once; crossing x_j past x_i contributes chi_i(g_j).
        for (size_t j = i + 1; j < theta; ++j) {
          Scalar q = pairing(spec.group, spec.characters[i], spec.degrees[j]);
          coeff = coeff * q.pow(a[j] * b[i]);
        }
      }
      c[i] = a[i] + b[i];
      if (c[i] >= spec.orders[i]) return {Scalar::zero(), {}};
    }
    return {coeff, c};
  };

  std::map<Index, Morphism::Column> prod_entries;
  const Index dim = obj.dim();
  for (Index ia = 0; ia < dim; ++ia)
    for (Index ib = 0; ib < dim; ++ib) {
      auto [coeff, c] = mono_product(basis.exponents[ia], basis.exponents[ib]);
      if (!coeff.is_zero()) prod_entries[ia * dim + ib][basis.index.at(c)] = coeff;
    }
  out.product = Morphism::make({obj, obj}, {obj}, std::move(prod_entries));

  std::map<Index, Morphism::Column> unit_entries;
  unit_entries[0][basis.index.at(std::vector<long>(theta, 0))] = Scalar::one();
  out.unit = Morphism::make({}, {obj}, std::move(unit_entries));

  std::map<Index, Morphism::Column> counit_entries;
  counit_entries[basis.index.at(std::vector<long>(theta, 0))][0] = Scalar::one();
  out.counit = Morphism::make({obj}, {}, std::move(counit_entries));

  // Coproduct by iterated braided multiplication of primitives: Delta(x^a) =
  // prod_i (x_i (x) 1 + 1 (x) x_i)^{a_i} in U (x) U with
  // (u1 (x) u2)(v1 (x) v2) = chi_{v1}(g_{u2}) (u1 v1 (x) u2 v2).
  auto braided_pair_mult = [&](const std::map<std::pair<Index, Index>, Scalar>& acc,
                               size_t gen) {
    std::map<std::pair<Index, Index>, Scalar> next;
    std::vector<long> g(theta, 0);
    g[gen] = 1;
    for (const auto& [key, c] : acc) {
      const auto& [u1, u2] = key;
      // term (x_gen (x) 1): braid x_gen past u2
      {
        Scalar q = pairing(spec.group, obj.basis[basis.index.at(g)].character,
                           obj.basis[u2].degree);
        // crossing u2 past x_gen: coefficient chi_{x_gen}(g_{u2})
        auto [pc, pm] = mono_product(basis.exponents[u1], g);
        if (!pc.is_zero()) {
          auto k2 = std::make_pair(basis.index.at(pm), u2);
          Scalar v = c * q * pc;
          auto [it, ins] = next.try_emplace(k2, v);
          if (!ins) it->second += v;
        }
      }
      // term (1 (x) x_gen): no crossing
      {
        auto [pc, pm] = mono_product(basis.exponents[u2], g);
        if (!pc.is_zero()) {
          auto k2 = std::make_pair(u1, basis.index.at(pm));
          Scalar v = c * pc;
          auto [it, ins] = next.try_emplace(k2, v);
          if (!ins) it->second += v;
        }
      }
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    return next;
  };

  std::map<Index, Morphism::Column> cop_entries;
  for (Index ia = 0; ia < dim; ++ia) {
    std::map<std::pair<Index, Index>, Scalar> acc;
    acc[{basis.index.at(std::vector<long>(theta, 0)),
         basis.index.at(std::vector<long>(theta, 0))}] = Scalar::one();
    for (size_t i = 0; i < theta; ++i)
      for (long k = 0; k < basis.exponents[ia][i]; ++k) acc = braided_pair_mult(acc, i);
    for (const auto& [key, c] : acc) cop_entries[ia][key.first * dim + key.second] = c;
  }
  out.coproduct = Morphism::make({obj}, {obj, obj}, std::move(cop_entries));

  if (spec.strict && !is_symmetric_on({obj}))
    throw InvalidSpec("strict mode: braiding is not symmetric on the carrier, A/H extraction refused");

  GradedObject a_obj = obj, h_obj = obj;
  a_obj.name = "qlsA";
  h_obj.name = "qlsH";
  Morphism c_uu = braiding(obj, obj);
  Morphism bracket_a = sub(out.product, compose(out.product, c_uu));
  Morphism cobracket_h = sub(out.coproduct, compose(c_uu, out.coproduct));
  out.a = BraidedLieBialgebra{a_obj,
                              Morphism::make({a_obj, a_obj}, {a_obj}, bracket_a.entries()),
                              Morphism::zero({a_obj}, {a_obj, a_obj})};
  out.h = BraidedLieBialgebra{h_obj, Morphism::zero({h_obj, h_obj}, {h_obj}),
                              Morphism::make({h_obj}, {h_obj, h_obj}, cobracket_h.entries())};
  return out;
}

std::vector<std::string> example_names() {
  return {"sl2_qt", "borel2", "superline", "qls", "matrix", "zero1", "zero3"};
}

ExampleBundle example_library(const std::string& name) {
  ExampleBundle out;
  out.name = name;
  out.axioms = {"L1", "L2", "CL1", "CL2", "LB"};
  if (name == "sl2_qt") {
    auto sl2 = sl2_quasitriangular();
    out.bialgebra = sl2.bialgebra;
    out.r_matrix = sl2.r_matrix;
    out.axioms = {"L1", "L2", "CL1", "CL2", "LB", "COB", "CYBE", "CYBE-I", "CYBE-II"};
  } else if (name == "borel2") {
    out.bialgebra = borel2();
  } else if (name == "superline") {
    out.bialgebra = superline();
  } else if (name == "qls") {
    QLSSpec spec;
    spec.group = GroupData{{2}};
    spec.degrees = {GroupElement{{1}}};
    spec.characters = {Character{{1}}};
    spec.orders = {2};
    auto qls = build_quantum_linear_space(spec);
    DoubleBicrosssumSpec d;
    d.a = qls.a;
    d.h = qls.h;
    d.actions = ActionData::zero(qls.a.object, qls.h.object);
    d.variant = Variant::DirectSum;
    out.bialgebra = build_double_bicrosssum(d).d;
  } else if (name == "matrix") {
    GradedObject u = plain_object("U", {"u1", "u2"});
    out.bialgebra = build_matrix_example(u).xy;
  } else if (name == "zero1") {
    out.bialgebra = zero_example(1);
  } else if (name == "zero3") {
    out.bialgebra = zero_example(3);
  } else {
    throw Error("unknown example: " + name);
  }
  return out;
}

}  // namespace brlie
