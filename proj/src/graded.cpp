#include "brlie/graded.hpp"

#include <set>

namespace brlie {

long GroupData::conductor() const {
  long l = 1;
  for (long n : cyclic_orders) l = lcm_long(l, n);
  return l;
}

void GroupData::validate() const {
  for (long n : cyclic_orders)
    if (n < 1) throw ShapeError("group order must be >= 1");
}

Residues reduce(const GroupData& g, Residues r) {
  if (r.v.size() != g.cyclic_orders.size())
    throw ShapeError("residue vector length does not match group rank");
  for (size_t t = 0; t < r.v.size(); ++t) {
    const long n = g.cyclic_orders[t];
    r.v[t] = ((r.v[t] % n) + n) % n;
  }
  return r;
}

Residues group_add(const GroupData& g, const Residues& a, const Residues& b) {
  Residues r = a;
  for (size_t t = 0; t < r.v.size(); ++t) r.v[t] += b.v[t];
  return reduce(g, r);
}

Residues group_neg(const GroupData& g, const Residues& a) {
  Residues r = a;
  for (auto& x : r.v) x = -x;
  return reduce(g, r);
}

GroupElement group_identity(const GroupData& g) {
  return GroupElement{std::vector<long>(g.cyclic_orders.size(), 0)};
}

Scalar pairing(const GroupData& g, const Character& chi, const GroupElement& elem) {
  const long l = g.conductor();
  long exponent = 0;
  for (size_t t = 0; t < g.cyclic_orders.size(); ++t) {
    const long n = g.cyclic_orders[t];
    exponent = (exponent + (l / n) * ((chi.v[t] * elem.v[t]) % n)) % l;
  }
  return Scalar::root_of_unity(l, exponent);
}

void GradedObject::validate() const {
  group.validate();
  std::set<std::string> labels;
  for (const auto& b : basis) {
    if (!labels.insert(b.label).second)
      throw ShapeError("duplicate basis label '" + b.label + "' in object " + name);
    if (b.degree.v.size() != group.cyclic_orders.size() ||
        b.character.v.size() != group.cyclic_orders.size())
      throw ShapeError("degree/character rank mismatch in object " + name);
    for (size_t t = 0; t < group.cyclic_orders.size(); ++t) {
      if (b.degree.v[t] < 0 || b.degree.v[t] >= group.cyclic_orders[t] ||
          b.character.v[t] < 0 || b.character.v[t] >= group.cyclic_orders[t])
        throw ShapeError("residues out of range in object " + name);
    }
  }
}

GradedObject dual_object(const GradedObject& u) {
  GradedObject d;
  d.name = u.name + "*";
  d.group = u.group;
  d.basis.reserve(u.basis.size());
  for (const auto& b : u.basis) {
    d.basis.push_back(BasisVector{b.label + "*", group_neg(u.group, b.degree),
                                  group_neg(u.group, b.character)});
  }
  return d;
}

GradedObject direct_sum_object(const GradedObject& u, const GradedObject& v) {
  if (!(u.group == v.group)) throw ShapeError("direct sum requires a common group");
  GradedObject d;
  d.name = u.name + "+" + v.name;
  d.group = u.group;
  d.basis.reserve(u.dim() + v.dim());
  for (const auto& b : u.basis)
    d.basis.push_back(BasisVector{u.name + "." + b.label, b.degree, b.character});
  for (const auto& b : v.basis)
    d.basis.push_back(BasisVector{v.name + "." + b.label, b.degree, b.character});
  return d;
}

bool is_symmetric_on(const std::vector<GradedObject>& objects) {
  for (const auto& obj_u : objects) {
    for (const auto& obj_v : objects) {
      if (!(obj_u.group == obj_v.group)) throw ShapeError("objects graded over different groups");
      for (const auto& u : obj_u.basis) {
        for (const auto& v : obj_v.basis) {
          Scalar q = pairing(obj_u.group, v.character, u.degree) *
                     pairing(obj_u.group, u.character, v.degree);
          if (!q.is_one()) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace brlie
