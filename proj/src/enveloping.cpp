#include "brlie/enveloping.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>

namespace brlie {

namespace {

bool trivially_graded(const GradedObject& obj) {
  for (long n : obj.group.cyclic_orders)
    if (n != 1) return false;
  return true;
}

std::vector<int> letters_of(const Mono& m) {
  std::vector<int> w;
  for (size_t i = 0; i < m.exp.size(); ++i)
    for (int k = 0; k < m.exp[i]; ++k) w.push_back(static_cast<int>(i));
  return w;
}

Mono mono_of_letters(size_t n, const std::vector<int>& sorted_word) {
  Mono m{std::vector<int>(n, 0)};
  for (int a : sorted_word) m.exp[static_cast<size_t>(a)] += 1;
  return m;
}

}  // namespace

int Mono::degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

std::string Mono::str(const std::vector<std::string>& labels) const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] == 0) continue;
    if (!first) out << "*";
    first = false;
    out << labels[i];
    if (exp[i] > 1) out << "^" << exp[i];
  }
  if (first) out << "1";
  return out.str();
}

int EnvElem::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms) d = std::max(d, m.degree());
  return d;
}

EnvElem& EnvElem::add_term(const Mono& m, const Scalar& c) {
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) terms.erase(it);
  return *this;
}

EnvElem operator+(const EnvElem& a, const EnvElem& b) {
  EnvElem out = a;
  for (const auto& [m, c] : b.terms) out.add_term(m, c);
  return out;
}

EnvElem operator-(const EnvElem& a, const EnvElem& b) {
  EnvElem out = a;
  for (const auto& [m, c] : b.terms) out.add_term(m, -c);
  return out;
}

EnvElem operator*(const Scalar& s, const EnvElem& a) {
  EnvElem out;
  if (!s.is_zero())
    for (const auto& [m, c] : a.terms) out.terms.emplace(m, s * c);
  return out;
}

bool operator==(const EnvElem& a, const EnvElem& b) { return (a - b).is_zero(); }

TruncatedEnveloping::TruncatedEnveloping(BraidedLieAlgebra lie, int degree_cap)
    : lie_(std::move(lie)), cap_(degree_cap) {
  if (cap_ < 1) throw Error("degree cap must be >= 1");
  if (!trivially_graded(lie_.object))
    throw UnsupportedCategory("truncated enveloping algebras require trivial grading");
  // Enumerate exponent vectors by total degree, then lexicographically.
  const size_t n = lie_.object.dim();
  for (int d = 0; d <= cap_; ++d) {
    std::vector<int> exp(n, 0);
    // iterate all exp with sum d
    std::function<void(size_t, int)> rec = [&](size_t i, int remaining) {
      if (i + 1 == n || n == 0) {
        if (n == 0) {
          if (remaining == 0) basis_.push_back(Mono{exp});
          return;
        }
        exp[i] = remaining;
        basis_.push_back(Mono{exp});
        exp[i] = 0;
        return;
      }
      for (int k = remaining; k >= 0; --k) {
        exp[i] = k;
        rec(i + 1, remaining - k);
      }
      exp[i] = 0;
    };
    if (n == 0) {
      if (d == 0) basis_.push_back(Mono{exp});
    } else {
      rec(0, d);
    }
  }
}

long TruncatedEnveloping::monomials_of_degree(long n, long d) {
  // multiset coefficient C(n + d - 1, d)
  if (d == 0) return 1;
  long num = 1, den = 1;
  for (long k = 1; k <= d; ++k) {
    num *= n + d - k;
    den *= k;
  }
  return num / den;
}

Mono TruncatedEnveloping::generator_mono(std::size_t i) const {
  Mono m{std::vector<int>(lie_.object.dim(), 0)};
  m.exp[i] = 1;
  return m;
}

Mono TruncatedEnveloping::unit_mono(std::size_t n) { return Mono{std::vector<int>(n, 0)}; }

EnvElem TruncatedEnveloping::lie_bracket(std::size_t i, std::size_t j) const {
  const size_t n = lie_.object.dim();
  EnvElem out;
  for (const auto& [k, c] : lie_.bracket.apply(i * n + j)) {
    Mono m{std::vector<int>(n, 0)};
    m.exp[k] = 1;
    out.add_term(m, c);
  }
  return out;
}

EnvElem TruncatedEnveloping::straighten(const std::vector<int>& word,
                                        bool rightmost_pivot) const {
  const size_t n = lie_.object.dim();
  if (static_cast<int>(word.size()) > cap_)
    throw OutOfRange("word length exceeds the degree cap");
  EnvElem out;
  // (word, coefficient) work stack; each reduction step either sorts two
  // adjacent letters or shortens the word via the bracket.
  std::vector<std::pair<std::vector<int>, Scalar>> stack{{word, Scalar::one()}};
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();
    long pivot = -1;
    if (rightmost_pivot) {
      for (size_t k = w.size(); k-- > 1;)
        if (w[k - 1] > w[k]) {
          pivot = static_cast<long>(k - 1);
          break;
        }
    } else {
      for (size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] > w[k + 1]) {
          pivot = static_cast<long>(k);
          break;
        }
    }
    if (pivot < 0) {
      out.add_term(mono_of_letters(n, w), c);
      continue;
    }
    const size_t k = static_cast<size_t>(pivot);
    std::vector<int> swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    stack.emplace_back(std::move(swapped), c);
    // x_b x_a -> x_a x_b + [x_b, x_a]
    for (const auto& [idx, bc] :
         lie_.bracket.apply(static_cast<Index>(w[k]) * n + static_cast<Index>(w[k + 1]))) {
      std::vector<int> shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(k));
      shorter.push_back(static_cast<int>(idx));
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(k) + 2, w.end());
      stack.emplace_back(std::move(shorter), c * bc);
    }
  }
  return out;
}

EnvElem TruncatedEnveloping::multiply(const Mono& u, const Mono& v) const {
  if (u.degree() + v.degree() > cap_)
    throw OutOfRange("product degree " + std::to_string(u.degree() + v.degree()) +
                     " exceeds the cap " + std::to_string(cap_));
  std::vector<int> w = letters_of(u);
  const std::vector<int> wv = letters_of(v);
  w.insert(w.end(), wv.begin(), wv.end());
  return straighten(w);
}

EnvElem TruncatedEnveloping::multiply(const EnvElem& u, const EnvElem& v) const {
  if (u.max_degree() + v.max_degree() > cap_)
    throw OutOfRange("product degree exceeds the cap");
  EnvElem out;
  for (const auto& [mu, cu] : u.terms)
    for (const auto& [mv, cv] : v.terms) {
      const Scalar c = cu * cv;
      for (const auto& [m, cm] : multiply(mu, mv).terms) out.add_term(m, c * cm);
    }
  return out;
}

EnvElem2 TruncatedEnveloping::coproduct(const Mono& m) const {
  const size_t n = lie_.object.dim();
  EnvElem2 acc;
  acc[{unit_mono(n), unit_mono(n)}] = Scalar::one();
  for (int letter : letters_of(m)) {
    EnvElem2 next;
    const Mono g = generator_mono(static_cast<size_t>(letter));
    for (const auto& [key, c] : acc) {
      // multiply by (g (x) 1) and (1 (x) g) on the right
      for (const auto& [ml, cl] : multiply(key.first, g).terms) {
        auto k2 = std::make_pair(ml, key.second);
        auto [it, inserted] = next.try_emplace(k2, c * cl);
        if (!inserted) it->second += c * cl;
      }
      for (const auto& [mr, cr] : multiply(key.second, g).terms) {
        auto k2 = std::make_pair(key.first, mr);
        auto [it, inserted] = next.try_emplace(k2, c * cr);
        if (!inserted) it->second += c * cr;
      }
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    acc = std::move(next);
  }
  return acc;
}

Scalar TruncatedEnveloping::counit(const EnvElem& u) const {
  auto it = u.terms.find(unit_mono(lie_.object.dim()));
  return it == u.terms.end() ? Scalar::zero() : it->second;
}

EnvElem TruncatedEnveloping::include_lie(std::size_t i) const {
  EnvElem e;
  e.add_term(generator_mono(i), Scalar::one());
  return e;
}

// ---------------------------------------------------------------------------
// TruncatedDoubleCrossProduct
// ---------------------------------------------------------------------------

TruncatedDoubleCrossProduct::TruncatedDoubleCrossProduct(const BraidedLieAlgebra& a,
                                                         const BraidedLieAlgebra& h,
                                                         const Morphism& alpha,
                                                         const Morphism& beta, int degree_cap)
    : ua_(a, degree_cap), uh_(h, degree_cap), alpha_(alpha), beta_(beta), cap_(degree_cap) {
  Env env;
  env.objects["A"] = a.object;
  env.objects["H"] = h.object;
  env.generators["bracket_A"] = a.bracket;
  env.generators["bracket_H"] = h.bracket;
  env.generators["alpha"] = alpha_;
  env.generators["beta"] = beta_;
  // A matched pair needs the two module laws besides (M1), (M2).
  for (const auto& report : check_all(env, {"MOD", "M1", "M2"})) {
    if (!report.passed)
      throw PreconditionViolation("(" + report.axiom + ") fails; not a matched pair");
  }
  const AxiomEntry& mod = axiom("MOD");
  AxiomEntry mod_right;
  mod_right.id = "MOD-right";
  mod_right.lhs = mirror_diagram(mod.lhs);
  mod_right.rhs = mirror_diagram(mod.rhs);
  mod_right.citation = mod.citation + " (right-handed mirror)";
  if (!check_axiom_entry(mod_right, env).passed)
    throw PreconditionViolation("(MOD-right) fails; not a matched pair");
}

EnvElem TruncatedDoubleCrossProduct::act_left_gen(int x, const Mono& m) const {
  const size_t na = ua_.generators();
  if (m.degree() == 0) return {};  // x |> 1 = eps(x) 1 = 0 for primitive x
  const std::vector<int> w = letters_of(m);
  const int a = w.front();
  if (m.degree() == 1) {
    EnvElem out;
    for (const auto& [k, c] :
         alpha_.apply(static_cast<Index>(x) * na + static_cast<Index>(a)))
      out.add_term(ua_.generator_mono(k), c);
    return out;
  }
  Mono rest = mono_of_letters(na, {w.begin() + 1, w.end()});
  Mono head = ua_.generator_mono(static_cast<size_t>(a));
  // x |> (a b) = (x |> a) b + a (x |> b) + (x <| a) |> b
  EnvElem out = ua_.multiply(act_left_gen(x, head), EnvElem{{{rest, Scalar::one()}}});
  out = out + ua_.multiply(EnvElem{{{head, Scalar::one()}}}, act_left_gen(x, rest));
  const size_t nh = uh_.generators();
  for (const auto& [y, c] : beta_.apply(static_cast<Index>(x) * na + static_cast<Index>(a)))
    out = out + c * act_left_gen(static_cast<int>(y), rest);
  return out;
}

EnvElem TruncatedDoubleCrossProduct::act_left(const Mono& w, const Mono& m) const {
  auto key = std::make_pair(w, m);
  auto cached = left_cache_.find(key);
  if (cached != left_cache_.end()) return cached->second;
  EnvElem out;
  if (w.degree() == 0) {
    out.add_term(m, Scalar::one());
  } else {
    const std::vector<int> letters = letters_of(w);
    Mono rest = mono_of_letters(uh_.generators(), {letters.begin() + 1, letters.end()});
    EnvElem inner = act_left(rest, m);
    for (const auto& [mm, c] : inner.terms) out = out + c * act_left_gen(letters.front(), mm);
  }
  left_cache_.emplace(key, out);
  return out;
}

EnvElem TruncatedDoubleCrossProduct::act_right_gen_on_gen(const Mono& w, int a) const {
  const size_t na = ua_.generators();
  const size_t nh = uh_.generators();
  if (w.degree() == 0) return {};  // 1 <| a = eps(a) 1 = 0
  const std::vector<int> letters = letters_of(w);
  const int x = letters.front();
  if (w.degree() == 1) {
    EnvElem out;
    for (const auto& [y, c] :
         beta_.apply(static_cast<Index>(x) * na + static_cast<Index>(a)))
      out.add_term(uh_.generator_mono(y), c);
    return out;
  }
  Mono rest = mono_of_letters(nh, {letters.begin() + 1, letters.end()});
  // (x w') <| a = sum (x <| (w'_(1) |> a)) w'_(2) + x (w' <| a)
  EnvElem out;
  for (const auto& [split, c] : uh_.coproduct(rest)) {
    EnvElem acted = act_left(split.first, ua_.generator_mono(static_cast<size_t>(a)));
    // acted is a Lie element of A (degree <= 1, zero counit)
    for (const auto& [am, ac] : acted.terms) {
      if (am.degree() != 1) throw Error("action left the Lie part (internal)");
      int gen_a = 0;
      for (size_t i = 0; i < am.exp.size(); ++i)
        if (am.exp[i] == 1) gen_a = static_cast<int>(i);
      EnvElem x_da;
      for (const auto& [y, bc] :
           beta_.apply(static_cast<Index>(x) * na + static_cast<Index>(gen_a)))
        x_da.add_term(uh_.generator_mono(y), bc);
      out = out + (c * ac) * uh_.multiply(x_da, EnvElem{{{split.second, Scalar::one()}}});
    }
  }
  out = out + uh_.multiply(EnvElem{{{uh_.generator_mono(static_cast<size_t>(x)), Scalar::one()}}},
                           act_right_gen_on_gen(rest, a));
  return out;
}

EnvElem TruncatedDoubleCrossProduct::act_right(const Mono& w, const Mono& m) const {
  auto key = std::make_pair(w, m);
  auto cached = right_cache_.find(key);
  if (cached != right_cache_.end()) return cached->second;
  EnvElem out;
  if (m.degree() == 0) {
    out.add_term(w, Scalar::one());
  } else {
    const std::vector<int> letters = letters_of(m);
    Mono rest = mono_of_letters(ua_.generators(), {letters.begin() + 1, letters.end()});
    EnvElem stepped = act_right_gen_on_gen(w, letters.front());
    for (const auto& [wm, c] : stepped.terms) out = out + c * act_right(wm, rest);
  }
  right_cache_.emplace(key, out);
  return out;
}

EnvElem2 TruncatedDoubleCrossProduct::multiply(const Mono& a, const Mono& x, const Mono& b,
                                               const Mono& y) const {
  if (a.degree() + x.degree() + b.degree() + y.degree() > cap_)
    throw OutOfRange("double-cross-product degree exceeds the cap");
  EnvElem2 out;
  for (const auto& [xs, cx] : uh_.coproduct(x)) {
    for (const auto& [bs, cb] : ua_.coproduct(b)) {
      EnvElem left = ua_.multiply(EnvElem{{{a, Scalar::one()}}}, act_left(xs.first, bs.first));
      EnvElem right = uh_.multiply(act_right(xs.second, bs.second), EnvElem{{{y, Scalar::one()}}});
      const Scalar c = cx * cb;
      for (const auto& [ml, cl] : left.terms)
        for (const auto& [mr, cr] : right.terms) {
          auto key = std::make_pair(ml, mr);
          auto [it, inserted] = out.try_emplace(key, c * cl * cr);
          if (!inserted) it->second += c * cl * cr;
        }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

EnvElem2 TruncatedDoubleCrossProduct::multiply(const EnvElem2& u, const EnvElem2& v) const {
  EnvElem2 out;
  for (const auto& [ku, cu] : u)
    for (const auto& [kv, cv] : v) {
      EnvElem2 part = multiply(ku.first, ku.second, kv.first, kv.second);
      const Scalar c = cu * cv;
      for (const auto& [k, pc] : part) {
        auto [it, inserted] = out.try_emplace(k, c * pc);
        if (!inserted) it->second += c * pc;
      }
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Morphism TruncatedDoubleCrossProduct::restricted_alpha() const {
  const size_t na = ua_.generators(), nh = uh_.generators();
  std::map<Index, Morphism::Column> entries;
  for (size_t x = 0; x < nh; ++x)
    for (size_t a = 0; a < na; ++a) {
      EnvElem v = act_left(uh_.generator_mono(x), ua_.generator_mono(a));
      for (const auto& [m, c] : v.terms) {
        if (m.degree() != 1)
          throw NotRestrictable("alpha' image leaves the Lie part on generators");
        for (size_t i = 0; i < na; ++i)
          if (m.exp[i] == 1) entries[x * na + a][i] = c;
      }
    }
  return Morphism::make({uh_.lie().object, ua_.lie().object}, {ua_.lie().object},
                        std::move(entries));
}

Morphism TruncatedDoubleCrossProduct::restricted_beta() const {
  const size_t na = ua_.generators(), nh = uh_.generators();
  std::map<Index, Morphism::Column> entries;
  for (size_t x = 0; x < nh; ++x)
    for (size_t a = 0; a < na; ++a) {
      EnvElem v = act_right(uh_.generator_mono(x), ua_.generator_mono(a));
      for (const auto& [m, c] : v.terms) {
        if (m.degree() != 1)
          throw NotRestrictable("beta' image leaves the Lie part on generators");
        for (size_t i = 0; i < nh; ++i)
          if (m.exp[i] == 1) entries[x * na + a][i] = c;
      }
    }
  return Morphism::make({uh_.lie().object, ua_.lie().object}, {uh_.lie().object},
                        std::move(entries));
}

RestrictedPair restrict_matched_pair(const BraidedLieAlgebra& a, const BraidedLieAlgebra& h,
                                     const TruncatedDoubleCrossProduct& product) {
  RestrictedPair out;
  out.alpha = product.restricted_alpha();
  out.beta = product.restricted_beta();
  Env env;
  env.objects["A"] = a.object;
  env.objects["H"] = h.object;
  env.generators["bracket_A"] = a.bracket;
  env.generators["bracket_H"] = h.bracket;
  env.generators["alpha"] = out.alpha;
  env.generators["beta"] = out.beta;
  out.matched_pair_reports = check_all(env, {"M1", "M2"});
  return out;
}

// ---------------------------------------------------------------------------
// Theorem: U(A |><| H) ~ U(A) |><| U(H)
// ---------------------------------------------------------------------------

namespace {

// Exact rank by Gaussian elimination.
size_t matrix_rank(std::vector<std::vector<Scalar>> m) {
  size_t rank = 0;
  const size_t rows = m.size();
  if (rows == 0) return 0;
  const size_t cols = m[0].size();
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Scalar inv = m[rank][col].inverse();
    for (size_t c = col; c < cols; ++c) m[rank][c] = inv * m[rank][c];
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      const Scalar f = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

using Key4 = std::array<Mono, 4>;

std::map<Key4, Scalar> tensor_coproduct(const TruncatedEnveloping& ua,
                                        const TruncatedEnveloping& uh, const Mono& a,
                                        const Mono& x) {
  // Coproduct of a (x) x in the tensor coalgebra U(A) (x) U(H), keyed as
  // (a1, x1, a2, x2).
  std::map<Key4, Scalar> out;
  for (const auto& [as, ca] : ua.coproduct(a))
    for (const auto& [xs, cx] : uh.coproduct(x)) {
      Key4 key{as.first, xs.first, as.second, xs.second};
      auto [it, inserted] = out.try_emplace(key, ca * cx);
      if (!inserted) it->second += ca * cx;
    }
  return out;
}

}  // namespace

IsoReport verify_env_isomorphism(const BraidedLieAlgebra& a, const BraidedLieAlgebra& h,
                                 const Morphism& alpha, const Morphism& beta, int degree_cap) {
  IsoReport report;
  const size_t na = a.object.dim(), nh = h.object.dim();

  DoubleBicrosssumSpec spec;
  spec.a = {a.object, a.bracket, Morphism::zero({a.object}, {a.object, a.object})};
  spec.h = {h.object, h.bracket, Morphism::zero({h.object}, {h.object, h.object})};
  spec.actions = ActionData::zero(a.object, h.object);
  spec.actions.alpha = alpha;
  spec.actions.beta = beta;
  spec.variant = Variant::Bicrosssum;
  DoubleBicrosssum dbl = build_double_bicrosssum(spec);
  BraidedLieAlgebra d{dbl.d.object, dbl.d.bracket};

  TruncatedEnveloping ud(d, degree_cap);
  TruncatedDoubleCrossProduct prod(a, h, alpha, beta, degree_cap);
  const TruncatedEnveloping& ua = prod.left();
  const TruncatedEnveloping& uh = prod.right();

  const Mono one_a = TruncatedEnveloping::unit_mono(na);
  const Mono one_h = TruncatedEnveloping::unit_mono(nh);

  // f on a generator of D = A (+) H: a (x) 1 + 1 (x) x.
  auto f_gen = [&](size_t k) {
    EnvElem2 out;
    if (k < na) out[{ua.generator_mono(k), one_h}] = Scalar::one();
    else out[{one_a, uh.generator_mono(k - na)}] = Scalar::one();
    return out;
  };
  auto f_lie = [&](const Morphism::Column& col) {
    EnvElem2 out;
    for (const auto& [k, c] : col) {
      for (const auto& [key, v] : f_gen(k)) {
        auto [it, inserted] = out.try_emplace(key, c * v);
        if (!inserted) it->second += c * v;
      }
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  };
  auto sub2 = [](const EnvElem2& u, const EnvElem2& v) {
    EnvElem2 out = u;
    for (const auto& [k, c] : v) {
      auto [it, inserted] = out.try_emplace(k, -c);
      if (!inserted) it->second -= c;
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  };

  // (i) f is a Lie map on generator pairs.
  report.bracket_compatible = true;
  const size_t nd = na + nh;
  for (size_t u = 0; u < nd && report.bracket_compatible; ++u) {
    for (size_t v = 0; v < nd && report.bracket_compatible; ++v) {
      EnvElem2 lhs = f_lie(d.bracket.apply(u * nd + v));
      EnvElem2 rhs = sub2(prod.multiply(f_gen(u), f_gen(v)), prod.multiply(f_gen(v), f_gen(u)));
      if (!sub2(lhs, rhs).empty()) report.bracket_compatible = false;
    }
  }

  // (ii) f is a coalgebra map on generators: the image is primitive in the
  // tensor coalgebra.
  report.coalgebra_compatible = true;
  for (size_t u = 0; u < nd && report.coalgebra_compatible; ++u) {
    std::map<Key4, Scalar> actual;
    for (const auto& [key, c] : f_gen(u)) {
      for (const auto& [k4, v] : tensor_coproduct(ua, uh, key.first, key.second)) {
        auto [it, inserted] = actual.try_emplace(k4, c * v);
        if (!inserted) it->second += c * v;
      }
    }
    std::map<Key4, Scalar> expected;
    for (const auto& [key, c] : f_gen(u)) {
      Key4 left{key.first, key.second, one_a, one_h};
      Key4 right{one_a, one_h, key.first, key.second};
      expected[left] = expected.count(left) ? expected[left] + c : c;
      auto [it, inserted] = expected.try_emplace(right, c);
      if (!inserted) it->second += c;
    }
    for (const auto& [k, c] : expected) {
      auto it = actual.find(k);
      if (it == actual.end() || !(it->second == c)) report.coalgebra_compatible = false;
      else actual.erase(it);
    }
    for (const auto& [k, c] : actual)
      if (!c.is_zero()) report.coalgebra_compatible = false;
  }

  // (iii) dimension match of the degree-<=D components.
  size_t pairs = 0;
  for (const auto& ma : ua.basis())
    for (const auto& mh : uh.basis())
      if (ma.degree() + mh.degree() <= degree_cap) ++pairs;
  report.dimensions_match = (pairs == ud.dim());

  // (iv) alpha = beta = 0: full multiplicative identification with the
  // tensor-product algebra.
  if (alpha.is_zero() && beta.is_zero()) {
    report.tensor_algebra_identified = true;
    for (const auto& ma : ua.basis()) {
      for (const auto& mh : uh.basis()) {
        for (const auto& mb : ua.basis()) {
          for (const auto& my : uh.basis()) {
            if (ma.degree() + mh.degree() + mb.degree() + my.degree() > degree_cap) continue;
            EnvElem2 lhs = prod.multiply(ma, mh, mb, my);
            EnvElem2 rhs;
            for (const auto& [ml, cl] : ua.multiply(ma, mb).terms)
              for (const auto& [mr, cr] : uh.multiply(mh, my).terms) rhs[{ml, mr}] = cl * cr;
            if (!sub2(lhs, rhs).empty()) report.tensor_algebra_identified = false;
          }
        }
      }
    }
  }

  // Injectivity of f on the degree-<=1 component, as a rank check.
  std::vector<std::pair<Mono, Mono>> deg1_basis;
  deg1_basis.emplace_back(one_a, one_h);
  for (size_t i = 0; i < na; ++i) deg1_basis.emplace_back(ua.generator_mono(i), one_h);
  for (size_t j = 0; j < nh; ++j) deg1_basis.emplace_back(one_a, uh.generator_mono(j));
  std::vector<std::vector<Scalar>> matrix(nd, std::vector<Scalar>(deg1_basis.size()));
  for (size_t u = 0; u < nd; ++u) {
    EnvElem2 img = f_gen(u);
    for (size_t c = 0; c < deg1_basis.size(); ++c) {
      auto it = img.find(deg1_basis[c]);
      matrix[u][c] = it == img.end() ? Scalar::zero() : it->second;
    }
  }
  report.injective_on_generators = (matrix_rank(std::move(matrix)) == nd);
  return report;
}

}  // namespace brlie
