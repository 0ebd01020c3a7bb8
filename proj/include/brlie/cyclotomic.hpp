#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace brlie {

using Rational = mpq_class;

/// Error hierarchy shared by the whole library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidConductor : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};
struct ShapeError : Error {
  using Error::Error;
};
struct HomogeneityError : Error {
  using Error::Error;
};

long euler_phi(long n);
long lcm_long(long a, long b);

/// Coefficients of the n-th cyclotomic polynomial, ascending powers, monic.
const std::vector<Rational>& cyclotomic_polynomial(long n);

/// An element of Q(zeta_N), stored as a polynomial in zeta_N of degree
/// < phi(N), reduced modulo the N-th cyclotomic polynomial. Equality across
/// conductors promotes both sides to the lcm first; the power-basis
/// coordinates of a field element are unique, so comparison is coefficientwise.
class Scalar {
 public:
  Scalar() : conductor_(1), coeffs_(1, Rational(0)) {}

  static Scalar zero(long conductor = 1);
  static Scalar one(long conductor = 1);
  static Scalar rational(const Rational& q, long conductor = 1);
  static Scalar integer(long v, long conductor = 1);
  /// zeta_N^k (k may be negative); root_of_unity(N, 0) == 1.
  static Scalar root_of_unity(long n, long k);
  /// From raw coefficient list c_0..c_m of powers zeta_N^0..zeta_N^m
  /// (any length; reduced mod Phi_N).
  static Scalar from_coeffs(long conductor, std::vector<Rational> coeffs);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;

  /// Image under Q(zeta_M) -> Q(zeta_N), M | N (zeta_M -> zeta_N^{N/M}).
  Scalar promoted(long new_conductor) const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws DivisionByZero on zero
  Scalar pow(long e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Deterministic human form, e.g. "1/2 - z3^2" (zN denotes zeta_N).
  std::string str() const;

 private:
  Scalar(long conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  long conductor_;
  std::vector<Rational> coeffs_;  // length phi(conductor_)
};

}  // namespace brlie
