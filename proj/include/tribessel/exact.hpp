#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tribessel {

using Integer = mpz_class;
using Rational = mpq_class;

/// Round-to-nearest conversion; mpq_get_d truncates, this does not.
double to_double(const Rational& q);
double to_double(const Integer& z);

/// Exact rational value of a finite double.
Rational exact_rational(double x);

/// Parses "p", "p/q" or a decimal literal such as "-3.5" into an exact rational.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& q);

/// num/den in canonical form.
Rational make_rational(const Integer& num, const Integer& den);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// sign * sqrt(square), with square >= 0 kept in canonical reduced form.
///
/// Every 3j and 6j symbol with integer arguments has this shape, and the set
/// is closed under multiplication and division, so products of coupling
/// coefficients stay exact until the final projection to double.
class RadicalRational {
 public:
  RadicalRational() = default;
  RadicalRational(int sign, Rational square);

  static RadicalRational from_rational(const Rational& q);
  static RadicalRational sqrt_of(const Rational& q);

  int sign() const { return sign_; }
  const Rational& square() const { return square_; }
  bool is_zero() const { return sign_ == 0; }

  /// True when the value itself is rational (square is a perfect square).
  bool is_rational() const;
  Rational rational_value() const;

  /// Correctly rounded up to one ulp.
  double to_double() const;

  /// "0", "-1/6", "sqrt(2/5)", "-sqrt(1/3)".
  std::string to_string() const;

  RadicalRational operator-() const { return {-sign_, square_}; }
  friend RadicalRational operator*(const RadicalRational& a, const RadicalRational& b);
  friend RadicalRational operator/(const RadicalRational& a, const RadicalRational& b);
  friend bool operator==(const RadicalRational& a, const RadicalRational& b) {
    return a.sign_ == b.sign_ && a.square_ == b.square_;
  }

 private:
  int sign_ = 0;
  Rational square_ = 0;
};

/// Exponents over the primes of a FactorialTable; may be negative.
using PrimePowers = std::vector<int>;

/// n! for n <= limit stored as prime-exponent vectors.
///
/// Built eagerly in the constructor and immutable afterwards, so one table can
/// be shared across threads.
class FactorialTable {
 public:
  explicit FactorialTable(unsigned limit);

  unsigned limit() const { return limit_; }
  std::span<const unsigned> primes() const { return primes_; }

  /// Exponent vector of n!; throws InvalidArgument beyond the limit.
  const PrimePowers& powers(unsigned n) const;

  PrimePowers zero() const { return PrimePowers(primes_.size(), 0); }

  /// Product of primes^exponents; exponents must be non-negative.
  Integer to_integer(const PrimePowers& e) const;
  Rational to_rational(const PrimePowers& e) const;

  /// sum_k sign_k * prod p^e_k, formed over the common denominator of all terms.
  Rational signed_sum(std::span<const std::pair<int, PrimePowers>> terms) const;

 private:
  unsigned limit_;
  std::vector<unsigned> primes_;
  std::vector<PrimePowers> table_;
};

/// Shared table supporting angular momenta up to 200 in 3j and 6j symbols.
const FactorialTable& default_factorials();

void add_to(PrimePowers& acc, const PrimePowers& e, int times = 1);

}  // namespace tribessel
