#include "tribessel/exact.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tribessel/error.hpp"

namespace tribessel {

namespace {

std::size_t bit_length(const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

// Rounds a positive integer with at least 64 significant bits to 53 and scales by 2^shift.
double round_scaled(const Integer& r, long shift) {
  const long excess = static_cast<long>(bit_length(r)) - 53;
  if (excess <= 0) return std::ldexp(r.get_d(), static_cast<int>(shift));
  Integer top = r >> excess;
  if (mpz_tstbit(r.get_mpz_t(), excess - 1)) top += 1;
  return std::ldexp(top.get_d(), static_cast<int>(excess + shift));
}

// floor(|num| * 2^s / den) with s picked so the quotient carries >= bits bits.
std::pair<Integer, long> scaled_quotient(const Integer& num, const Integer& den, long bits) {
  const long s = bits - static_cast<long>(bit_length(num)) + static_cast<long>(bit_length(den));
  Integer n = abs(num);
  Integer d = den;
  if (s >= 0)
    n <<= s;
  else
    d <<= -s;
  Integer q = n / d;
  return {q, s};
}

}  // namespace

double to_double(const Rational& q) {
  if (q == 0) return 0.0;
  auto [quot, s] = scaled_quotient(q.get_num(), q.get_den(), 80);
  const double v = round_scaled(quot, -s);
  return q < 0 ? -v : v;
}

double to_double(const Integer& z) { return to_double(Rational(z)); }

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("exact_rational: non-finite input");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidArgument("empty rational literal");
  if (text.find('/') != std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0)
      throw InvalidArgument("malformed rational: " + text);
    q.canonicalize();
    return q;
  }
  // Decimal literal: digits with an optional point, read exactly.
  std::string s = text;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  const auto dot = s.find('.');
  std::string digits = s;
  long scale = 0;
  if (dot != std::string::npos) {
    digits = s.substr(0, dot) + s.substr(dot + 1);
    scale = static_cast<long>(s.size() - dot - 1);
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw InvalidArgument("malformed rational: " + text);
  Integer num(digits, 10);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
  Rational q(num, den);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// ---------------------------------------------------------------------------

RadicalRational::RadicalRational(int sign, Rational square) : sign_(sign), square_(std::move(square)) {
  square_.canonicalize();
  if (square_ < 0) throw InvalidArgument("RadicalRational: negative square");
  if (sign_ == 0 || square_ == 0) {
    sign_ = 0;
    square_ = 0;
  } else {
    sign_ = sign_ > 0 ? 1 : -1;
  }
}

RadicalRational RadicalRational::from_rational(const Rational& q) {
  return {sgn(q), Rational(q * q)};
}

RadicalRational RadicalRational::sqrt_of(const Rational& q) { return {1, q}; }

bool RadicalRational::is_rational() const {
  return mpz_perfect_square_p(square_.get_num_mpz_t()) && mpz_perfect_square_p(square_.get_den_mpz_t());
}

Rational RadicalRational::rational_value() const {
  if (!is_rational()) throw DomainError("RadicalRational: value is irrational");
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), square_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), square_.get_den_mpz_t());
  Rational r(n, d);
  return sign_ < 0 ? Rational(-r) : r;
}

double RadicalRational::to_double() const {
  if (sign_ == 0) return 0.0;
  // sqrt(p/q) = sqrt(floor(p 2^s / q)) 2^(-s/2) with s even.
  auto [quot, s] = scaled_quotient(square_.get_num(), square_.get_den(), 160);
  if (s % 2 != 0) {
    quot <<= 1;
    ++s;
  }
  Integer root;
  mpz_sqrt(root.get_mpz_t(), quot.get_mpz_t());
  const double v = round_scaled(root, -s / 2);
  return sign_ * v;
}

std::string RadicalRational::to_string() const {
  if (sign_ == 0) return "0";
  if (is_rational()) return rational_value().get_str();
  return std::string(sign_ < 0 ? "-" : "") + "sqrt(" + square_.get_str() + ")";
}

RadicalRational operator*(const RadicalRational& a, const RadicalRational& b) {
  return {a.sign_ * b.sign_, Rational(a.square_ * b.square_)};
}

RadicalRational operator/(const RadicalRational& a, const RadicalRational& b) {
  if (b.is_zero()) throw DomainError("RadicalRational: division by zero");
  return {a.sign_ * b.sign_, Rational(a.square_ / b.square_)};
}

// ---------------------------------------------------------------------------

FactorialTable::FactorialTable(unsigned limit) : limit_(limit) {
  std::vector<bool> composite(limit + 1, false);
  for (unsigned p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes_.push_back(p);
    for (unsigned long q = static_cast<unsigned long>(p) * p; q <= limit; q += p) composite[q] = true;
  }
  table_.assign(limit + 1, PrimePowers(primes_.size(), 0));
  for (unsigned n = 2; n <= limit; ++n) {
    table_[n] = table_[n - 1];
    unsigned m = n;
    for (std::size_t i = 0; i < primes_.size() && m > 1; ++i) {
      while (m % primes_[i] == 0) {
        ++table_[n][i];
        m /= primes_[i];
      }
    }
  }
}

const PrimePowers& FactorialTable::powers(unsigned n) const {
  if (n > limit_)
    throw InvalidArgument("factorial argument " + std::to_string(n) + " beyond table limit " +
                          std::to_string(limit_));
  return table_[n];
}

Integer FactorialTable::to_integer(const PrimePowers& e) const {
  Integer r = 1;
  Integer pk;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (e[i] < 0) throw InvalidArgument("FactorialTable::to_integer: negative exponent");
    mpz_ui_pow_ui(pk.get_mpz_t(), primes_[i], static_cast<unsigned long>(e[i]));
    r *= pk;
  }
  return r;
}

Rational FactorialTable::to_rational(const PrimePowers& e) const {
  PrimePowers num(e.size(), 0), den(e.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) (e[i] >= 0 ? num[i] : den[i]) = std::abs(e[i]);
  Rational q(to_integer(num), to_integer(den));
  q.canonicalize();
  return q;
}

Rational FactorialTable::signed_sum(std::span<const std::pair<int, PrimePowers>> terms) const {
  if (terms.empty()) return 0;
  PrimePowers floor_exp(primes_.size(), 0);
  for (const auto& [sign, e] : terms)
    for (std::size_t i = 0; i < e.size(); ++i) floor_exp[i] = std::min(floor_exp[i], e[i]);
  Integer acc = 0;
  PrimePowers shifted(primes_.size());
  for (const auto& [sign, e] : terms) {
    for (std::size_t i = 0; i < e.size(); ++i) shifted[i] = e[i] - floor_exp[i];
    if (sign > 0)
      acc += to_integer(shifted);
    else
      acc -= to_integer(shifted);
  }
  return Rational(acc) * to_rational(floor_exp);
}

const FactorialTable& default_factorials() {
  // 6j sums reach (a+b+c+d+e+f)/... + 1 <= 4*200 + 1.
  static const FactorialTable table(4 * 200 + 2);
  return table;
}

void add_to(PrimePowers& acc, const PrimePowers& e, int times) {
  for (std::size_t i = 0; i < e.size(); ++i) acc[i] += times * e[i];
}

}  // namespace tribessel
