#pragma once

#include <optional>
#include <vector>

#include "tribessel/exact.hpp"

namespace tribessel {

/// Univariate polynomial with exact rational coefficients, lowest degree first.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  static RationalPolynomial constant(const Rational& c);
  /// The monomial c * x^power.
  static RationalPolynomial monomial(const Rational& c, unsigned power);
  /// (a + b x)
  static RationalPolynomial linear(const Rational& a, const Rational& b);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^power, zero beyond the degree.
  Rational coefficient(unsigned power) const;

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;
  long double operator()(long double x) const;

  RationalPolynomial derivative(unsigned times = 1) const;
  RationalPolynomial pow(unsigned n) const;
  /// Quotient by (1 + x)^k when the division is exact.
  std::optional<RationalPolynomial> divide_by_one_plus_x(unsigned k) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& c);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Polynomial in (x, m): coefficient of x^i is a polynomial in m.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::vector<RationalPolynomial> by_x_power);

  const std::vector<RationalPolynomial>& by_x_power() const { return terms_; }
  int x_degree() const { return static_cast<int>(terms_.size()) - 1; }

  /// Fixes m and returns the resulting polynomial in x.
  RationalPolynomial at_m(const Rational& m) const;
  double operator()(double x, double m) const;

  BivariatePolynomial times_x() const;
  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  /// Multiplies by a polynomial in m.
  BivariatePolynomial& operator*=(const RationalPolynomial& in_m);

  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void trim();
  std::vector<RationalPolynomial> terms_;
};

}  // namespace tribessel
