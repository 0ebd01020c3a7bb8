#include "brlie/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace brlie {

long euler_phi(long n) {
  if (n <= 0) throw InvalidConductor("euler_phi: n must be positive");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

namespace {

using Poly = std::vector<Rational>;  // ascending powers

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient-discarding remainder of a by monic b.
Poly poly_mod(Poly a, const Poly& b) {
  poly_trim(a);
  const size_t db = b.size() - 1;
  while (a.size() > db) {
    const Rational lead = a.back();
    const size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (size_t i = 0; i <= db; ++i) {
        a[shift + i] -= lead * b[i];
        a[shift + i].canonicalize();
      }
    }
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

// Exact division of a by b, requiring zero remainder.
Poly poly_divexact(Poly a, const Poly& b) {
  poly_trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const size_t db = b.size() - 1;
  const Rational& bl = b.back();
  while (a.size() >= b.size()) {
    Rational c = a.back() / bl;
    c.canonicalize();
    const size_t shift = a.size() - 1 - db;
    q[shift] = c;
    for (size_t i = 0; i <= db; ++i) {
      a[shift + i] -= c * b[i];
      a[shift + i].canonicalize();
    }
    poly_trim(a);
  }
  if (!a.empty()) throw Error("poly_divexact: nonzero remainder");
  return q;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] += a[i] * b[j];
      r[i + j].canonicalize();
    }
  }
  return r;
}

// Phi_n via x^n - 1 = prod_{d | n} Phi_d.
Poly compute_cyclotomic(long n, const std::map<long, Poly>& lower) {
  Poly num(static_cast<size_t>(n) + 1, Rational(0));
  num[0] = -1;
  num[static_cast<size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) num = poly_divexact(std::move(num), lower.at(d));
  }
  return num;
}

struct CyclotomicCache {
  std::mutex mu;
  std::map<long, Poly> phi;  // n -> Phi_n

  const Poly& get(long n) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = phi.find(n);
    if (it != phi.end()) return it->second;
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0 && !phi.count(d)) phi.emplace(d, compute_cyclotomic(d, phi));
    }
    return phi.at(n);
  }
};

CyclotomicCache& cache() {
  static CyclotomicCache c;
  return c;
}

// Extended Euclid in Q[x]: returns (g, u) with u*a = g mod b, g = gcd (monic).
std::pair<Poly, Poly> poly_half_gcd(Poly a, Poly b) {
  Poly u0{Rational(1)}, u1{};
  poly_trim(a);
  poly_trim(b);
  Poly r0 = a, r1 = b;
  while (!r1.empty()) {
    // r0 = q*r1 + r2
    Poly r2 = r0;
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
    const size_t db = r1.size() - 1;
    const Rational& bl = r1.back();
    while (r2.size() >= r1.size()) {
      Rational c = r2.back() / bl;
      c.canonicalize();
      const size_t shift = r2.size() - 1 - db;
      q[shift] += c;
      for (size_t i = 0; i <= db; ++i) {
        r2[shift + i] -= c * r1[i];
        r2[shift + i].canonicalize();
      }
      poly_trim(r2);
    }
    // u2 = u0 - q*u1
    Poly qu = poly_mul(q, u1);
    Poly u2 = u0;
    if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
    for (size_t i = 0; i < qu.size(); ++i) {
      u2[i] -= qu[i];
      u2[i].canonicalize();
    }
    poly_trim(u2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return {r0, u0};
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(long n) {
  if (n <= 0) throw InvalidConductor("cyclotomic_polynomial: n must be positive");
  return cache().get(n);
}

Scalar Scalar::zero(long conductor) {
  return Scalar(conductor, Poly(static_cast<size_t>(euler_phi(conductor)), Rational(0)));
}

Scalar Scalar::one(long conductor) { return rational(Rational(1), conductor); }

Scalar Scalar::rational(const Rational& q, long conductor) {
  Scalar s = zero(conductor);
  Rational v = q;
  v.canonicalize();
  s.coeffs_[0] = v;
  return s;
}

Scalar Scalar::integer(long v, long conductor) { return rational(Rational(v), conductor); }

Scalar Scalar::from_coeffs(long conductor, std::vector<Rational> coeffs) {
  if (conductor <= 0) throw InvalidConductor("conductor must be positive");
  const Poly& phi_n = cyclotomic_polynomial(conductor);
  for (auto& c : coeffs) c.canonicalize();
  Poly red = poly_mod(std::move(coeffs), phi_n);
  red.resize(static_cast<size_t>(euler_phi(conductor)), Rational(0));
  return Scalar(conductor, std::move(red));
}

Scalar Scalar::root_of_unity(long n, long k) {
  if (n <= 0) throw InvalidConductor("root_of_unity: conductor must be positive");
  long e = ((k % n) + n) % n;
  Poly p(static_cast<size_t>(e) + 1, Rational(0));
  p[static_cast<size_t>(e)] = 1;
  return from_coeffs(n, std::move(p));
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool Scalar::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Scalar::rational_value() const {
  if (!is_rational()) throw Error("Scalar is not rational: " + str());
  return coeffs_[0];
}

Scalar Scalar::promoted(long new_conductor) const {
  if (new_conductor == conductor_) return *this;
  if (new_conductor % conductor_ != 0)
    throw InvalidConductor("promotion requires old conductor to divide new one");
  const long stride = new_conductor / conductor_;
  Poly p(static_cast<size_t>(conductor_) * static_cast<size_t>(stride), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) p[i * static_cast<size_t>(stride)] = coeffs_[i];
  return from_coeffs(new_conductor, std::move(p));
}

Scalar Scalar::operator-() const {
  Poly p = coeffs_;
  for (auto& c : p) c = -c;
  return Scalar(conductor_, std::move(p));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  const long n = lcm_long(a.conductor_, b.conductor_);
  Scalar x = a.promoted(n), y = b.promoted(n);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) {
    x.coeffs_[i] += y.coeffs_[i];
    x.coeffs_[i].canonicalize();
  }
  return x;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  const long n = lcm_long(a.conductor_, b.conductor_);
  Scalar x = a.promoted(n), y = b.promoted(n);
  return Scalar::from_coeffs(n, poly_mul(x.coeffs_, y.coeffs_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("Scalar::inverse of zero");
  Poly a = coeffs_;
  poly_trim(a);
  auto [g, u] = poly_half_gcd(a, cyclotomic_polynomial(conductor_));
  // Phi_N is irreducible over Q, so g is a nonzero constant.
  if (g.size() != 1 || g[0] == 0) throw Error("Scalar::inverse: gcd not constant");
  for (auto& c : u) {
    c /= g[0];
    c.canonicalize();
  }
  return from_coeffs(conductor_, std::move(u));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = Scalar::one(conductor_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  const long n = lcm_long(a.conductor_, b.conductor_);
  return a.promoted(n).coeffs_ == b.promoted(n).coeffs_;
}

std::string Scalar::str() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool unit_coeff = (c == 1) && i > 0;
    if (!unit_coeff) out << c.get_str();
    if (i > 0) {
      if (!unit_coeff) out << "*";
      out << "z" << conductor_;
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace brlie
