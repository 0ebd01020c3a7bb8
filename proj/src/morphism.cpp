#include "brlie/morphism.hpp"

namespace brlie {

std::size_t signature_dim(const Signature& sig) {
  std::size_t d = 1;
  for (const auto& o : sig) d *= o.dim();
  return d;
}

std::vector<Index> split_index(const Signature& sig, Index flat) {
  std::vector<Index> parts(sig.size(), 0);
  for (size_t i = sig.size(); i-- > 0;) {
    const Index d = sig[i].dim();
    parts[i] = flat % d;
    flat /= d;
  }
  return parts;
}

Index join_index(const Signature& sig, const std::vector<Index>& parts) {
  Index flat = 0;
  for (size_t i = 0; i < sig.size(); ++i) {
    if (parts[i] >= sig[i].dim()) throw ShapeError("index out of range");
    flat = flat * sig[i].dim() + parts[i];
  }
  return flat;
}

namespace {

const GroupData& signature_group(const Signature& a, const Signature& b) {
  const GroupData* g = nullptr;
  for (const auto& o : a) g = g ? g : &o.group;
  for (const auto& o : b) g = g ? g : &o.group;
  static const GroupData trivial{};
  if (!g) return trivial;
  for (const auto& o : a)
    if (!(o.group == *g)) throw ShapeError("mixed groups in signature");
  for (const auto& o : b)
    if (!(o.group == *g)) throw ShapeError("mixed groups in signature");
  return *g;
}

}  // namespace

GroupElement total_degree(const Signature& sig, Index flat) {
  if (sig.empty()) return GroupElement{};
  const GroupData& g = sig.front().group;
  GroupElement acc = group_identity(g);
  const auto parts = split_index(sig, flat);
  for (size_t i = 0; i < sig.size(); ++i)
    acc = group_add(g, acc, sig[i].basis[parts[i]].degree);
  return acc;
}

Character total_character(const Signature& sig, Index flat) {
  if (sig.empty()) return Character{};
  const GroupData& g = sig.front().group;
  Character acc = group_identity(g);
  const auto parts = split_index(sig, flat);
  for (size_t i = 0; i < sig.size(); ++i)
    acc = group_add(g, acc, sig[i].basis[parts[i]].character);
  return acc;
}

void Morphism::prune() {
  for (auto it = cols_.begin(); it != cols_.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();)
      jt = jt->second.is_zero() ? it->second.erase(jt) : std::next(jt);
    it = it->second.empty() ? cols_.erase(it) : std::next(it);
  }
}

void Morphism::check_homogeneous() const {
  const GroupData& g = signature_group(dom_, cod_);
  const size_t dd = dom_dim(), cd = cod_dim();
  for (const auto& [x, col] : cols_) {
    if (x >= dd) throw ShapeError("domain index out of range");
    GroupElement dx = dom_.empty() ? group_identity(g) : total_degree(dom_, x);
    Character cx = dom_.empty() ? group_identity(g) : total_character(dom_, x);
    for (const auto& [y, s] : col) {
      (void)s;
      if (y >= cd) throw ShapeError("codomain index out of range");
      GroupElement dy = cod_.empty() ? group_identity(g) : total_degree(cod_, y);
      Character cy = cod_.empty() ? group_identity(g) : total_character(cod_, y);
      if (!(dx == dy) || !(cx == cy))
        throw HomogeneityError("entry violates degree/character homogeneity");
    }
  }
}

Morphism Morphism::make(Signature dom, Signature cod, std::map<Index, Column> entries) {
  Morphism m;
  m.dom_ = std::move(dom);
  m.cod_ = std::move(cod);
  m.cols_ = std::move(entries);
  for (const auto& o : m.dom_) o.validate();
  for (const auto& o : m.cod_) o.validate();
  m.prune();
  m.check_homogeneous();
  return m;
}

Morphism Morphism::zero(Signature dom, Signature cod) {
  return make(std::move(dom), std::move(cod), {});
}

Morphism Morphism::identity(Signature objs) {
  std::map<Index, Column> e;
  const size_t d = signature_dim(objs);
  for (Index i = 0; i < d; ++i) e[i][i] = Scalar::one();
  return make(objs, objs, std::move(e));
}

Scalar Morphism::entry(Index dom_index, Index cod_index) const {
  auto it = cols_.find(dom_index);
  if (it == cols_.end()) return Scalar::zero();
  auto jt = it->second.find(cod_index);
  return jt == it->second.end() ? Scalar::zero() : jt->second;
}

Morphism::Column Morphism::apply(Index dom_index) const {
  auto it = cols_.find(dom_index);
  return it == cols_.end() ? Column{} : it->second;
}

std::optional<Morphism::Witness> Morphism::first_nonzero() const {
  if (cols_.empty()) return std::nullopt;
  const auto& [x, col] = *cols_.begin();
  const auto& [y, s] = *col.begin();
  return Witness{split_index(dom_, x), split_index(cod_, y), s};
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (g.cod_ != f.dom_) throw ShapeError("compose: signature mismatch");
  std::map<Index, Morphism::Column> e;
  for (const auto& [x, gcol] : g.cols_) {
    Morphism::Column out;
    for (const auto& [y, gs] : gcol) {
      auto it = f.cols_.find(y);
      if (it == f.cols_.end()) continue;
      for (const auto& [z, fs] : it->second) {
        auto [jt, inserted] = out.try_emplace(z, fs * gs);
        if (!inserted) jt->second += fs * gs;
      }
    }
    if (!out.empty()) e.emplace(x, std::move(out));
  }
  return Morphism::make(g.dom_, f.cod_, std::move(e));
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  Signature dom = f.dom_, cod = f.cod_;
  dom.insert(dom.end(), g.dom_.begin(), g.dom_.end());
  cod.insert(cod.end(), g.cod_.begin(), g.cod_.end());
  const Index gdd = g.dom_dim(), gcd = g.cod_dim();
  std::map<Index, Morphism::Column> e;
  for (const auto& [xf, colf] : f.cols_)
    for (const auto& [xg, colg] : g.cols_) {
      auto& out = e[xf * gdd + xg];
      for (const auto& [yf, sf] : colf)
        for (const auto& [yg, sg] : colg) out[yf * gcd + yg] = sf * sg;
    }
  return Morphism::make(std::move(dom), std::move(cod), std::move(e));
}

Morphism add(const Morphism& f, const Morphism& g) {
  if (f.dom_ != g.dom_ || f.cod_ != g.cod_) throw ShapeError("add: signature mismatch");
  std::map<Index, Morphism::Column> e = f.cols_;
  for (const auto& [x, col] : g.cols_)
    for (const auto& [y, s] : col) {
      auto [it, inserted] = e[x].try_emplace(y, s);
      if (!inserted) it->second += s;
    }
  return Morphism::make(f.dom_, f.cod_, std::move(e));
}

Morphism sub(const Morphism& f, const Morphism& g) { return add(f, neg(g)); }

Morphism scale(const Scalar& s, const Morphism& f) {
  std::map<Index, Morphism::Column> e;
  if (!s.is_zero())
    for (const auto& [x, col] : f.cols_)
      for (const auto& [y, v] : col) e[x][y] = s * v;
  return Morphism::make(f.dom_, f.cod_, std::move(e));
}

Morphism neg(const Morphism& f) { return scale(-Scalar::one(), f); }

bool operator==(const Morphism& a, const Morphism& b) {
  if (a.dom_ != b.dom_ || a.cod_ != b.cod_) return false;
  return sub(a, b).is_zero();
}

bool same_entries(const Morphism& a, const Morphism& b) {
  if (a.dom_dim() != b.dom_dim() || a.cod_dim() != b.cod_dim()) return false;
  if (a.cols_.size() != b.cols_.size()) return false;
  auto it = a.cols_.begin();
  auto jt = b.cols_.begin();
  for (; it != a.cols_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second.size() != jt->second.size()) return false;
    auto ia = it->second.begin();
    auto ib = jt->second.begin();
    for (; ia != it->second.end(); ++ia, ++ib)
      if (ia->first != ib->first || ia->second != ib->second) return false;
  }
  return true;
}

Morphism braiding(const GradedObject& u, const GradedObject& v) {
  Signature dom{u, v}, cod{v, u};
  std::map<Index, Morphism::Column> e;
  for (Index i = 0; i < u.dim(); ++i)
    for (Index j = 0; j < v.dim(); ++j) {
      const Scalar q = pairing(u.group, v.basis[j].character, u.basis[i].degree);
      e[i * v.dim() + j][j * u.dim() + i] = q;
    }
  return Morphism::make(std::move(dom), std::move(cod), std::move(e));
}

Morphism inverse_braiding(const GradedObject& u, const GradedObject& v) {
  Signature dom{u, v}, cod{v, u};
  std::map<Index, Morphism::Column> e;
  for (Index i = 0; i < u.dim(); ++i)
    for (Index j = 0; j < v.dim(); ++j) {
      // (C_{V,U})^{-1}(u (x) v) = chi_u(g_v)^{-1} v (x) u
      const Scalar q = pairing(u.group, u.basis[i].character, v.basis[j].degree);
      e[i * v.dim() + j][j * u.dim() + i] = q.inverse();
    }
  return Morphism::make(std::move(dom), std::move(cod), std::move(e));
}

Morphism evaluation(const GradedObject& u) {
  GradedObject us = dual_object(u);
  std::map<Index, Morphism::Column> e;
  for (Index i = 0; i < u.dim(); ++i) e[i * u.dim() + i][0] = Scalar::one();
  return Morphism::make(Signature{us, u}, Signature{}, std::move(e));
}

Morphism coevaluation(const GradedObject& u) {
  GradedObject us = dual_object(u);
  std::map<Index, Morphism::Column> e;
  for (Index i = 0; i < u.dim(); ++i) e[0][i * u.dim() + i] = Scalar::one();
  return Morphism::make(Signature{}, Signature{u, us}, std::move(e));
}

Morphism injection_left(const GradedObject& u, const GradedObject& v) {
  GradedObject d = direct_sum_object(u, v);
  std::map<Index, Morphism::Column> e;
  for (Index i = 0; i < u.dim(); ++i) e[i][i] = Scalar::one();
  return Morphism::make(Signature{u}, Signature{d}, std::move(e));
}

Morphism injection_right(const GradedObject& u, const GradedObject& v) {
  GradedObject d = direct_sum_object(u, v);
  std::map<Index, Morphism::Column> e;
  for (Index i = 0; i < v.dim(); ++i) e[i][u.dim() + i] = Scalar::one();
  return Morphism::make(Signature{v}, Signature{d}, std::move(e));
}

Morphism projection_left(const GradedObject& u, const GradedObject& v) {
  GradedObject d = direct_sum_object(u, v);
  std::map<Index, Morphism::Column> e;
  for (Index i = 0; i < u.dim(); ++i) e[i][i] = Scalar::one();
  return Morphism::make(Signature{d}, Signature{u}, std::move(e));
}

Morphism projection_right(const GradedObject& u, const GradedObject& v) {
  GradedObject d = direct_sum_object(u, v);
  std::map<Index, Morphism::Column> e;
  for (Index i = 0; i < v.dim(); ++i) e[u.dim() + i][i] = Scalar::one();
  return Morphism::make(Signature{d}, Signature{v}, std::move(e));
}

DirectSumDuality direct_sum_duality(const GradedObject& u, const GradedObject& v) {
  DirectSumDuality out;
  out.object = direct_sum_object(u, v);
  GradedObject us = dual_object(u), vs = dual_object(v);
  out.dual = direct_sum_object(us, vs);
  // The summed duality pairs U* against U and V* against V blockwise; with
  // the basis order fixed by direct_sum_object this is delta on matching
  // summand indices. Built directly so out.dual (not dual_object(D)) is the
  // dual carrier.
  std::map<Index, Morphism::Column> ev_entries, coev_entries;
  const Index dd = out.object.dim();
  for (Index i = 0; i < u.dim(); ++i) {
    ev_entries[i * dd + i][0] = Scalar::one();
    coev_entries[0][i * dd + i] = Scalar::one();
  }
  for (Index i = 0; i < v.dim(); ++i) {
    const Index k = u.dim() + i;
    ev_entries[k * dd + k][0] = Scalar::one();
    coev_entries[0][k * dd + k] = Scalar::one();
  }
  out.ev = Morphism::make(Signature{out.dual, out.object}, Signature{}, std::move(ev_entries));
  out.coev = Morphism::make(Signature{}, Signature{out.object, out.dual}, std::move(coev_entries));
  return out;
}

}  // namespace brlie
