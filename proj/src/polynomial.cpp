#include "tribessel/polynomial.hpp"

#include <algorithm>

namespace tribessel {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, unsigned power) {
  std::vector<Rational> v(power + 1, Rational(0));
  v[power] = c;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::linear(const Rational& a, const Rational& b) {
  return RationalPolynomial({a, b});
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(unsigned power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

long double RationalPolynomial::operator()(long double x) const {
  // Coefficients enter as num/den in long double; exact for the integer-valued
  // coefficients that dominate here.
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const long double c = static_cast<long double>(to_double(it->get_num())) /
                          static_cast<long double>(to_double(it->get_den()));
    acc = acc * x + c;
  }
  return acc;
}

RationalPolynomial RationalPolynomial::derivative(unsigned times) const {
  std::vector<Rational> c = coeffs_;
  for (unsigned t = 0; t < times; ++t) {
    if (c.empty()) break;
    std::vector<Rational> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<long>(i);
    c = std::move(d);
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::pow(unsigned n) const {
  RationalPolynomial result = constant(1);
  RationalPolynomial base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

std::optional<RationalPolynomial> RationalPolynomial::divide_by_one_plus_x(unsigned k) const {
  std::vector<Rational> c = coeffs_;
  for (unsigned t = 0; t < k; ++t) {
    if (c.empty()) return RationalPolynomial{};
    // Synthetic division by (x + 1), highest degree first.
    std::vector<Rational> q(c.size() - 1);
    Rational carry = 0;
    for (std::size_t i = c.size() - 1; i >= 1; --i) {
      carry = c[i] - carry;
      q[i - 1] = carry;
    }
    if (c[0] - carry != 0) return std::nullopt;
    c = std::move(q);
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------

BivariatePolynomial::BivariatePolynomial(std::vector<RationalPolynomial> by_x_power)
    : terms_(std::move(by_x_power)) {
  trim();
}

void BivariatePolynomial::trim() {
  while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
}

RationalPolynomial BivariatePolynomial::at_m(const Rational& m) const {
  std::vector<Rational> c;
  c.reserve(terms_.size());
  for (const auto& t : terms_) c.push_back(t(m));
  return RationalPolynomial(std::move(c));
}

double BivariatePolynomial::operator()(double x, double m) const {
  double acc = 0.0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) acc = acc * x + (*it)(m);
  return acc;
}

BivariatePolynomial BivariatePolynomial::times_x() const {
  std::vector<RationalPolynomial> t;
  t.reserve(terms_.size() + 1);
  t.emplace_back();
  t.insert(t.end(), terms_.begin(), terms_.end());
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  if (o.terms_.size() > terms_.size()) terms_.resize(o.terms_.size());
  for (std::size_t i = 0; i < o.terms_.size(); ++i) terms_[i] += o.terms_[i];
  trim();
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  if (o.terms_.size() > terms_.size()) terms_.resize(o.terms_.size());
  for (std::size_t i = 0; i < o.terms_.size(); ++i) terms_[i] -= o.terms_[i];
  trim();
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const RationalPolynomial& in_m) {
  for (auto& t : terms_) t = t * in_m;
  trim();
  return *this;
}

}  // namespace tribessel
