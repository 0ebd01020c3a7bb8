#include "brlie/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace brlie {

namespace {
ExprPtr node(DiagramExpr e) { return std::make_shared<DiagramExpr>(std::move(e)); }
}

ExprPtr make_generator(std::string name) {
  return node({DiagramExpr::Kind::Generator, std::move(name), {}, {}, {}, {}, Rational(0)});
}
ExprPtr make_id(std::string obj) {
  return node({DiagramExpr::Kind::Id, "", {std::move(obj)}, {}, {}, {}, Rational(0)});
}
ExprPtr make_braid(std::string x, std::string y) {
  return node({DiagramExpr::Kind::Braid, "", {std::move(x), std::move(y)}, {}, {}, {}, Rational(0)});
}
ExprPtr make_inverse_braid(std::string x, std::string y) {
  return node({DiagramExpr::Kind::InverseBraid, "", {std::move(x), std::move(y)}, {}, {}, {}, Rational(0)});
}
ExprPtr make_ev(std::string obj) {
  return node({DiagramExpr::Kind::Ev, "", {std::move(obj)}, {}, {}, {}, Rational(0)});
}
ExprPtr make_coev(std::string obj) {
  return node({DiagramExpr::Kind::Coev, "", {std::move(obj)}, {}, {}, {}, Rational(0)});
}
ExprPtr make_zero(std::vector<std::string> dom, std::vector<std::string> cod) {
  return node({DiagramExpr::Kind::Zero, "", {}, std::move(dom), std::move(cod), {}, Rational(0)});
}
ExprPtr make_comp(std::vector<ExprPtr> args) {
  if (args.size() == 1) return args[0];
  return node({DiagramExpr::Kind::Comp, "", {}, {}, {}, std::move(args), Rational(0)});
}
ExprPtr make_tensor(std::vector<ExprPtr> args) {
  if (args.size() == 1) return args[0];
  return node({DiagramExpr::Kind::Tensor, "", {}, {}, {}, std::move(args), Rational(0)});
}
ExprPtr make_add(std::vector<ExprPtr> args) {
  if (args.size() == 1) return args[0];
  return node({DiagramExpr::Kind::Add, "", {}, {}, {}, std::move(args), Rational(0)});
}
ExprPtr make_sub(ExprPtr a, ExprPtr b) { return make_add({std::move(a), make_neg(std::move(b))}); }
ExprPtr make_scale(Rational q, ExprPtr e) {
  q.canonicalize();
  return node({DiagramExpr::Kind::Scale, "", {}, {}, {}, {std::move(e)}, std::move(q)});
}
ExprPtr make_neg(ExprPtr e) {
  return node({DiagramExpr::Kind::Neg, "", {}, {}, {}, {std::move(e)}, Rational(0)});
}

std::string sig_str(const SymSig& s) {
  auto word = [](const std::vector<std::string>& w) {
    if (w.empty()) return std::string("I");
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out += "(x)";
      out += w[i];
    }
    return out;
  };
  return word(s.dom) + " -> " + word(s.cod);
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  void expect(char c) {
    skip();
    if (pos >= s.size() || s[pos] != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  bool try_consume(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) throw SyntaxError("expected identifier", pos);
    return s.substr(start, pos - start);
  }

  std::string object_name() {
    std::string n = ident();
    while (pos < s.size() && s[pos] == '*') {
      n += '*';
      ++pos;
    }
    return n;
  }

  Rational rational_literal() {
    skip();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw SyntaxError("expected rational literal", pos);
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      size_t den = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == den) throw SyntaxError("expected denominator", pos);
    }
    Rational q(s.substr(start, pos - start));
    q.canonicalize();
    return q;
  }

  std::vector<std::string> object_list_until(char stop1, char stop2) {
    // 'I' alone denotes the empty word.
    std::vector<std::string> out;
    skip();
    if (pos < s.size() && s[pos] == 'I') {
      size_t save = pos;
      std::string n = object_name();
      if (n == "I") {
        skip();
        if (pos < s.size() && (s[pos] == stop1 || s[pos] == stop2)) return out;
      }
      pos = save;
    }
    out.push_back(object_name());
    while (try_consume(',')) out.push_back(object_name());
    return out;
  }

  std::vector<ExprPtr> arg_list() {
    std::vector<ExprPtr> args;
    args.push_back(expr());
    while (try_consume(',')) args.push_back(expr());
    expect(')');
    return args;
  }

  ExprPtr expr() {
    skip();
    size_t at = pos;
    std::string head = ident();
    if (head == "comp" || head == "tensor" || head == "add") {
      expect('(');
      auto args = arg_list();
      if (args.size() < 2) throw SyntaxError(head + " needs at least 2 arguments", at);
      if (head == "comp") return make_comp(std::move(args));
      if (head == "tensor") return make_tensor(std::move(args));
      return make_add(std::move(args));
    }
    if (head == "sub") {
      expect('(');
      auto a = expr();
      expect(',');
      auto b = expr();
      expect(')');
      return make_sub(std::move(a), std::move(b));
    }
    if (head == "neg") {
      expect('(');
      auto a = expr();
      expect(')');
      return make_neg(std::move(a));
    }
    if (head == "scale") {
      expect('(');
      Rational q = rational_literal();
      expect(',');
      auto a = expr();
      expect(')');
      return make_scale(std::move(q), std::move(a));
    }
    if (head == "id") {
      expect('(');
      std::vector<std::string> objs;
      objs.push_back(object_name());
      while (try_consume(',')) objs.push_back(object_name());
      expect(')');
      if (objs.size() == 1) return make_id(std::move(objs[0]));
      return node({DiagramExpr::Kind::Id, "", std::move(objs), {}, {}, {}, Rational(0)});
    }
    if (head == "ev" || head == "coev") {
      expect('(');
      std::string obj = object_name();
      expect(')');
      if (head == "ev") return make_ev(std::move(obj));
      return make_coev(std::move(obj));
    }
    if (head == "braid" || head == "inverse_braid") {
      expect('(');
      std::string x = object_name();
      expect(',');
      std::string y = object_name();
      expect(')');
      return head == "braid" ? make_braid(std::move(x), std::move(y))
                             : make_inverse_braid(std::move(x), std::move(y));
    }
    if (head == "zero") {
      expect('(');
      auto dom = object_list_until('-', ')');
      skip();
      if (pos + 1 >= s.size() || s[pos] != '-' || s[pos + 1] != '>')
        throw SyntaxError("expected '->' in zero()", pos);
      pos += 2;
      auto cod = object_list_until(')', ')');
      expect(')');
      return make_zero(std::move(dom), std::move(cod));
    }
    // plain generator reference
    if (peek('(')) throw SyntaxError("unknown combinator '" + head + "'", at);
    return make_generator(std::move(head));
  }
};

}  // namespace

ExprPtr parse_diagram(const std::string& text) {
  Parser p(text);
  ExprPtr e = p.expr();
  p.skip();
  if (p.pos != text.size()) throw SyntaxError("trailing input", p.pos);
  return e;
}

std::string print_diagram(const ExprPtr& e) {
  using K = DiagramExpr::Kind;
  std::ostringstream out;
  auto list = [&](const char* head, const std::vector<ExprPtr>& args) {
    out << head << "(";
    for (size_t i = 0; i < args.size(); ++i) {
      if (i) out << ", ";
      out << print_diagram(args[i]);
    }
    out << ")";
  };
  switch (e->kind) {
    case K::Generator: out << e->name; break;
    case K::Id: {
      out << "id(";
      for (size_t i = 0; i < e->objs.size(); ++i) out << (i ? ", " : "") << e->objs[i];
      out << ")";
      break;
    }
    case K::Braid: out << "braid(" << e->objs[0] << ", " << e->objs[1] << ")"; break;
    case K::InverseBraid:
      out << "inverse_braid(" << e->objs[0] << ", " << e->objs[1] << ")";
      break;
    case K::Ev: out << "ev(" << e->objs[0] << ")"; break;
    case K::Coev: out << "coev(" << e->objs[0] << ")"; break;
    case K::Zero: {
      out << "zero(";
      if (e->zero_dom.empty()) out << "I";
      for (size_t i = 0; i < e->zero_dom.size(); ++i)
        out << (i ? ", " : "") << e->zero_dom[i];
      out << " -> ";
      if (e->zero_cod.empty()) out << "I";
      for (size_t i = 0; i < e->zero_cod.size(); ++i)
        out << (i ? ", " : "") << e->zero_cod[i];
      out << ")";
      break;
    }
    case K::Comp: list("comp", e->args); break;
    case K::Tensor: list("tensor", e->args); break;
    case K::Add: list("add", e->args); break;
    case K::Scale:
      out << "scale(" << e->factor.get_str() << ", " << print_diagram(e->args[0]) << ")";
      break;
    case K::Neg: out << "neg(" << print_diagram(e->args[0]) << ")"; break;
  }
  return out.str();
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind != b->kind || a->name != b->name || a->objs != b->objs ||
      a->zero_dom != b->zero_dom || a->zero_cod != b->zero_cod ||
      a->factor != b->factor || a->args.size() != b->args.size())
    return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!expr_equal(a->args[i], b->args[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Mirror
// ---------------------------------------------------------------------------

namespace {

std::string mirror_object(const std::string& n) {
  size_t stars = 0;
  std::string base = n;
  while (!base.empty() && base.back() == '*') {
    base.pop_back();
    ++stars;
  }
  if (base == "A") base = "H";
  else if (base == "H") base = "A";
  return base + std::string(stars, '*');
}

std::string mirror_generator(const std::string& n) {
  if (n == "alpha") return "beta";
  if (n == "beta") return "alpha";
  if (n == "phi") return "psi";
  if (n == "psi") return "phi";
  if (n == "bracket_A") return "bracket_H";
  if (n == "bracket_H") return "bracket_A";
  if (n == "cobracket_A") return "cobracket_H";
  if (n == "cobracket_H") return "cobracket_A";
  return n;
}

}  // namespace

ExprPtr mirror_diagram(const ExprPtr& e) {
  using K = DiagramExpr::Kind;
  switch (e->kind) {
    case K::Generator: return make_generator(mirror_generator(e->name));
    case K::Id: {
      std::vector<std::string> objs;
      for (auto it = e->objs.rbegin(); it != e->objs.rend(); ++it)
        objs.push_back(mirror_object(*it));
      return node({DiagramExpr::Kind::Id, "", std::move(objs), {}, {}, {}, Rational(0)});
    }
    case K::Braid:
      return make_braid(mirror_object(e->objs[1]), mirror_object(e->objs[0]));
    case K::InverseBraid:
      return make_inverse_braid(mirror_object(e->objs[1]), mirror_object(e->objs[0]));
    case K::Ev: return make_ev(mirror_object(e->objs[0]));
    case K::Coev: return make_coev(mirror_object(e->objs[0]));
    case K::Zero: {
      auto flip = [](const std::vector<std::string>& w) {
        std::vector<std::string> out;
        for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(mirror_object(*it));
        return out;
      };
      return make_zero(flip(e->zero_dom), flip(e->zero_cod));
    }
    case K::Comp: {
      std::vector<ExprPtr> args;
      for (const auto& a : e->args) args.push_back(mirror_diagram(a));
      return make_comp(std::move(args));
    }
    case K::Tensor: {
      std::vector<ExprPtr> args;
      for (auto it = e->args.rbegin(); it != e->args.rend(); ++it)
        args.push_back(mirror_diagram(*it));
      return make_tensor(std::move(args));
    }
    case K::Add: {
      std::vector<ExprPtr> args;
      for (const auto& a : e->args) args.push_back(mirror_diagram(a));
      return make_add(std::move(args));
    }
    case K::Scale: return make_scale(e->factor, mirror_diagram(e->args[0]));
    case K::Neg: return make_neg(mirror_diagram(e->args[0]));
  }
  throw Error("mirror_diagram: unreachable");
}

// ---------------------------------------------------------------------------
// Signature inference
// ---------------------------------------------------------------------------

namespace {

std::string dual_name(const std::string& n) {
  if (!n.empty() && n.back() == '*') return n.substr(0, n.size() - 1);
  return n + "*";
}

}  // namespace

const std::map<std::string, SymSig>& standard_generator_signatures() {
  static const std::map<std::string, SymSig> sigs = {
      {"bracket_A", {{"A", "A"}, {"A"}}},
      {"cobracket_A", {{"A"}, {"A", "A"}}},
      {"bracket_H", {{"H", "H"}, {"H"}}},
      {"cobracket_H", {{"H"}, {"H", "H"}}},
      {"alpha", {{"H", "A"}, {"A"}}},
      {"beta", {{"H", "A"}, {"H"}}},
      {"phi", {{"A"}, {"H", "A"}}},
      {"psi", {{"H"}, {"H", "A"}}},
      {"R", {{}, {"H", "H"}}},
      {"r", {{"H", "H"}, {}}},
  };
  return sigs;
}

SymSig infer_signature(const ExprPtr& e, const std::map<std::string, SymSig>& gen_sigs) {
  using K = DiagramExpr::Kind;
  switch (e->kind) {
    case K::Generator: {
      auto it = gen_sigs.find(e->name);
      if (it == gen_sigs.end()) throw UnboundGenerator("no signature for generator " + e->name);
      return it->second;
    }
    case K::Id: return {e->objs, e->objs};
    case K::Braid:
    case K::InverseBraid: return {{e->objs[0], e->objs[1]}, {e->objs[1], e->objs[0]}};
    case K::Ev: return {{dual_name(e->objs[0]), e->objs[0]}, {}};
    case K::Coev: return {{}, {e->objs[0], dual_name(e->objs[0])}};
    case K::Zero: return {e->zero_dom, e->zero_cod};
    case K::Comp: {
      SymSig acc = infer_signature(e->args.back(), gen_sigs);
      for (size_t i = e->args.size() - 1; i-- > 0;) {
        SymSig f = infer_signature(e->args[i], gen_sigs);
        if (f.dom != acc.cod)
          throw TypeError("comp mismatch: " + sig_str(f) + " after " + sig_str(acc));
        acc.cod = f.cod;
      }
      return acc;
    }
    case K::Tensor: {
      SymSig acc;
      for (const auto& a : e->args) {
        SymSig f = infer_signature(a, gen_sigs);
        acc.dom.insert(acc.dom.end(), f.dom.begin(), f.dom.end());
        acc.cod.insert(acc.cod.end(), f.cod.begin(), f.cod.end());
      }
      return acc;
    }
    case K::Add: {
      SymSig first = infer_signature(e->args[0], gen_sigs);
      for (size_t i = 1; i < e->args.size(); ++i) {
        SymSig f = infer_signature(e->args[i], gen_sigs);
        if (!(f == first))
          throw TypeError("add mismatch: " + sig_str(first) + " vs " + sig_str(f));
      }
      return first;
    }
    case K::Scale:
    case K::Neg: return infer_signature(e->args[0], gen_sigs);
  }
  throw Error("infer_signature: unreachable");
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

GradedObject Env::object(const std::string& name) const {
  auto it = objects.find(name);
  if (it != objects.end()) return it->second;
  if (!name.empty() && name.back() == '*') {
    return dual_object(object(name.substr(0, name.size() - 1)));
  }
  throw UnboundGenerator("unbound object " + name);
}

const Morphism& Env::generator(const std::string& name) const {
  auto it = generators.find(name);
  if (it == generators.end()) throw UnboundGenerator("unbound generator " + name);
  return it->second;
}

Morphism evaluate(const ExprPtr& e, const Env& env) {
  using K = DiagramExpr::Kind;
  switch (e->kind) {
    case K::Generator: return env.generator(e->name);
    case K::Id: {
      Signature sig;
      for (const auto& n : e->objs) sig.push_back(env.object(n));
      return Morphism::identity(std::move(sig));
    }
    case K::Braid: return braiding(env.object(e->objs[0]), env.object(e->objs[1]));
    case K::InverseBraid:
      return inverse_braiding(env.object(e->objs[0]), env.object(e->objs[1]));
    case K::Ev: return evaluation(env.object(e->objs[0]));
    case K::Coev: return coevaluation(env.object(e->objs[0]));
    case K::Zero: {
      Signature dom, cod;
      for (const auto& n : e->zero_dom) dom.push_back(env.object(n));
      for (const auto& n : e->zero_cod) cod.push_back(env.object(n));
      return Morphism::zero(std::move(dom), std::move(cod));
    }
    case K::Comp: {
      Morphism acc = evaluate(e->args.back(), env);
      for (size_t i = e->args.size() - 1; i-- > 0;)
        acc = compose(evaluate(e->args[i], env), acc);
      return acc;
    }
    case K::Tensor: {
      Morphism acc = evaluate(e->args[0], env);
      for (size_t i = 1; i < e->args.size(); ++i) acc = tensor(acc, evaluate(e->args[i], env));
      return acc;
    }
    case K::Add: {
      Morphism acc = evaluate(e->args[0], env);
      for (size_t i = 1; i < e->args.size(); ++i) acc = add(acc, evaluate(e->args[i], env));
      return acc;
    }
    case K::Scale: return scale(Scalar::rational(e->factor), evaluate(e->args[0], env));
    case K::Neg: return neg(evaluate(e->args[0], env));
  }
  throw Error("evaluate: unreachable");
}

ExprPtr infinitesimal_braiding_expr() {
  // Four composites A(x)A -> A(x)A; signs (+,+,-,-).
  static const ExprPtr sc = parse_diagram(
      "add("
      "  comp(tensor(alpha, id(A)), tensor(braid(A,H), id(A)), tensor(id(A), phi)),"
      "  comp(tensor(id(A), alpha), tensor(braid(H,A), id(A)), tensor(phi, id(A))),"
      "  neg(comp(tensor(alpha, id(A)), tensor(id(H), braid(A,A)), tensor(phi, id(A)))),"
      "  neg(comp(tensor(id(A), alpha), tensor(braid(H,A), id(A)), tensor(id(H), braid(A,A)),"
      "           tensor(braid(A,H), id(A)), tensor(id(A), phi))))");
  return sc;
}

Morphism compute_infinitesimal_braiding(const Env& env) {
  return evaluate(infinitesimal_braiding_expr(), env);
}

}  // namespace brlie
