#include "tribessel/legendre.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <mutex>

#include "tribessel/error.hpp"

namespace tribessel {

namespace {

long double to_long_double(const Rational& q) {
  // Exact whenever numerator and denominator fit in 64 bits.
  if (mpz_sizeinbase(q.get_num_mpz_t(), 2) <= 63 && mpz_sizeinbase(q.get_den_mpz_t(), 2) <= 63) {
    const long double n = static_cast<long double>(mpz_get_si(q.get_num_mpz_t()));
    const long double d = static_cast<long double>(mpz_get_si(q.get_den_mpz_t()));
    return n / d;
  }
  return static_cast<long double>(to_double(q));
}

Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Gamma(q + 1) for q >= 0, exact factorial when q is an integer.
template <typename T>
T gamma_plus_one(const Rational& q) {
  if (is_integer(q)) {
    const long n = q.get_num().get_si();
    if (n <= 20) return static_cast<T>(factorial(static_cast<unsigned>(n)).get_si());
    return static_cast<T>(to_double(factorial(static_cast<unsigned>(n))));
  }
  if constexpr (std::is_same_v<T, long double>)
    return std::tgamma(to_long_double(q) + 1.0L);
  else
    return std::tgamma(to_double(q) + 1.0);
}

// Generalized binomial C(z, k) = z (z-1) ... (z-k+1) / k!.
Rational binomial_general(const Rational& z, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= (z - i);
  return r / Rational(factorial(k));
}

template <typename T>
T jacobi_explicit(int n, const Rational& a, const Rational& b, T x) {
  return jacobi_polynomial(n, a, b)(x);
}

template <typename T>
T jacobi_recurrence(int n, const Rational& a, const Rational& b, T x) {
  if (n < 0) throw InvalidArgument("jacobi_p: negative degree");
  if (n == 0) return T(1);
  const Rational ab = a + b;
  // P_1 directly; the recurrence is degenerate at n = 0 when a + b = 0.
  T p_prev = T(1);
  T p = to_long_double(Rational((a - b) / 2)) + to_long_double(Rational((ab + 2) / 2)) * x;
  for (int k = 1; k < n; ++k) {
    const Rational two_k_ab = 2 * k + ab;
    const Rational den = 2 * (k + 1) * (k + ab + 1) * two_k_ab;
    if (den == 0) return jacobi_explicit(n, a, b, x);
    const Rational c_x = (two_k_ab + 1) * two_k_ab * (two_k_ab + 2) / den;
    const Rational c_0 = (two_k_ab + 1) * (a * a - b * b) / den;
    const Rational c_prev = 2 * (k + a) * (k + b) * (two_k_ab + 2) / den;
    const T next = (static_cast<T>(to_long_double(c_x)) * x + static_cast<T>(to_long_double(c_0))) * p -
                   static_cast<T>(to_long_double(c_prev)) * p_prev;
    p_prev = p;
    p = next;
  }
  return p;
}

// Double-double rounding, enough for the 64-bit long double mantissa.
template <typename T>
T to_t(const Rational& q) {
  const double hi = to_double(q);
  if constexpr (std::is_same_v<T, long double>)
    return static_cast<long double>(hi) + static_cast<long double>(to_double(Rational(q - exact_rational(hi))));
  else
    return hi;
}

Rational long_double_rational(long double x) {
  const double hi = static_cast<double>(x);
  return exact_rational(hi) + exact_rational(static_cast<double>(x - static_cast<long double>(hi)));
}

// poly_l(x, m) at fixed m, cached.
const RationalPolynomial& polynomial_at(int l, const Rational& m) {
  static std::mutex lock;
  static std::map<std::pair<int, std::pair<Integer, Integer>>, RationalPolynomial> cache;
  const auto key = std::pair{l, std::pair<Integer, Integer>{m.get_num(), m.get_den()}};
  {
    std::lock_guard guard(lock);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  RationalPolynomial p = legendre_polynomial_part(l).at_m(m);
  std::lock_guard guard(lock);
  return cache.emplace(key, std::move(p)).first->second;
}

template <typename T>
T assoc_general(int l, const Rational& m, T x) {
  if (l < 0) throw InvalidArgument("assoc_legendre_general: negative degree");
  if (!(x >= T(-1) && x <= T(1))) throw InvalidArgument("assoc_legendre_general: x outside [-1, 1]");
  if (x == T(1) || x == T(-1)) {
    const bool upper = x == T(1);
    if (m == 0) return (upper || l % 2 == 0) ? T(1) : T(-1);
    const bool classical = is_integer(m) && abs_rational(m) <= l;
    if (classical) return T(0);
    // Prefactor ((1+x)/(1-x))^(m/2) vanishes at x=1 for m<0 and at x=-1 for m>0.
    if ((upper && m < 0) || (!upper && m > 0)) return T(0);
    throw DomainError("assoc_legendre_general: irregular endpoint for this order");
  }
  // poly_l(x, m) is evaluated exactly at the binary x, so zeros of P_l^m and the
  // classical (1 -+ x)^|m| factors come out to a few ulp in relative terms.
  const Rational exact_x = long_double_rational(x);
  const Rational poly = polynomial_at(l, m)(exact_x);
  const T ratio = to_t<T>(Rational((1 + exact_x) / (1 - exact_x)));
  const T half_m = to_t<T>(m) / T(2);
  return to_t<T>(poly) / gamma_plus_one<T>(abs_rational(Rational(l - m))) * std::pow(ratio, half_m);
}

struct PolynomialTable {
  std::mutex lock;
  std::deque<BivariatePolynomial> rows;
};

PolynomialTable& polynomial_table() {
  static PolynomialTable table;
  return table;
}

// poly_l(x, -lambda) / (l+lambda)! = (1+x)^s Q(x) with s = lambda when lambda <= l
// (the classical zero at x = -1) and s = 0 otherwise. Q is rounded once; the two
// endpoint powers stay outside so nothing cancels near x = +-1.
struct WeightedMinus {
  unsigned plus_power = 0;
  RationalPolynomial exact;
  std::vector<double> q;
};

const WeightedMinus& weighted_minus_factors(int l, int lambda) {
  static std::mutex lock;
  static std::map<std::pair<int, int>, WeightedMinus> cache;
  std::lock_guard guard(lock);
  auto it = cache.find({l, lambda});
  if (it != cache.end()) return it->second;
  RationalPolynomial p = legendre_polynomial_part(l).at_m(Rational(-lambda));
  p *= make_rational(1, factorial(static_cast<unsigned>(l + lambda)));
  WeightedMinus w;
  if (lambda <= l) {
    auto quotient = p.divide_by_one_plus_x(static_cast<unsigned>(lambda));
    if (!quotient) throw DomainError("legendre_weighted_minus: expected (1+x)^lambda factor is missing");
    p = *quotient;
    w.plus_power = static_cast<unsigned>(lambda);
  }
  for (const auto& c : p.coefficients()) w.q.push_back(to_double(c));
  w.exact = std::move(p);
  return cache.emplace(std::pair{l, lambda}, std::move(w)).first->second;
}

}  // namespace

double legendre_p(int l, double x) {
  if (l < 0) throw InvalidArgument("legendre_p: negative degree");
  if (!(x >= -1.0 && x <= 1.0)) throw InvalidArgument("legendre_p: x outside [-1, 1]");
  if (l == 0) return 1.0;
  double p_prev = 1.0, p = x;
  for (int k = 1; k < l; ++k) {
    const double next = ((2 * k + 1) * x * p - k * p_prev) / (k + 1);
    p_prev = p;
    p = next;
  }
  return p;
}

RationalPolynomial jacobi_polynomial(int n, const Rational& a, const Rational& b) {
  if (n < 0) throw InvalidArgument("jacobi_polynomial: negative degree");
  const auto un = static_cast<unsigned>(n);
  const RationalPolynomial minus = RationalPolynomial::linear(Rational(-1, 2), Rational(1, 2));
  const RationalPolynomial plus = RationalPolynomial::linear(Rational(1, 2), Rational(1, 2));
  RationalPolynomial sum;
  for (unsigned s = 0; s <= un; ++s) {
    const Rational c = binomial_general(Rational(n + a), un - s) * binomial_general(Rational(n + b), s);
    if (c == 0) continue;
    sum += minus.pow(s) * plus.pow(un - s) * c;
  }
  return sum;
}

double jacobi_p(int n, const Rational& a, const Rational& b, double x) {
  return jacobi_recurrence<double>(n, a, b, x);
}

long double jacobi_p(int n, const Rational& a, const Rational& b, long double x) {
  return jacobi_recurrence<long double>(n, a, b, x);
}

double norm_constant(int l, const Rational& m) {
  if (l < 0) throw InvalidArgument("norm_constant: negative degree");
  const Rational d = abs_rational(Rational(l - m));
  if (is_integer(d))
    return to_double(make_rational(factorial(static_cast<unsigned>(l)), factorial(static_cast<unsigned>(d.get_num().get_ui()))));
  return to_double(factorial(static_cast<unsigned>(l))) / std::tgamma(to_double(d) + 1.0);
}

long double norm_constant_ld(int l, const Rational& m) {
  if (l < 0) throw InvalidArgument("norm_constant: negative degree");
  const Rational d = abs_rational(Rational(l - m));
  return gamma_plus_one<long double>(Rational(l)) / gamma_plus_one<long double>(d);
}

double assoc_legendre_general(int l, const Rational& m, double x) { return assoc_general<double>(l, m, x); }

long double assoc_legendre_general(int l, const Rational& m, long double x) {
  return assoc_general<long double>(l, m, x);
}

const BivariatePolynomial& legendre_polynomial_part(int l) {
  if (l < 0) throw InvalidArgument("legendre_polynomial_part: negative degree");
  auto& table = polynomial_table();
  std::lock_guard guard(table.lock);
  if (table.rows.empty()) {
    table.rows.emplace_back(std::vector<RationalPolynomial>{RationalPolynomial::constant(1)});
    // x - m
    table.rows.emplace_back(std::vector<RationalPolynomial>{RationalPolynomial::linear(0, -1),
                                                            RationalPolynomial::constant(1)});
  }
  while (static_cast<int>(table.rows.size()) <= l) {
    const int k = static_cast<int>(table.rows.size()) - 1;
    BivariatePolynomial next = table.rows[k].times_x();
    next *= RationalPolynomial::constant(2 * k + 1);
    BivariatePolynomial prev = table.rows[k - 1];
    // (k^2 - m^2)
    prev *= RationalPolynomial({Rational(k * k), Rational(0), Rational(-1)});
    next -= prev;
    table.rows.push_back(std::move(next));
  }
  return table.rows[static_cast<std::size_t>(l)];
}

double assoc_legendre_polynomial_form(int l, const Rational& m, double x) {
  if (!(x > -1.0 && x < 1.0)) return assoc_legendre_general(l, m, x);
  const double poly = legendre_polynomial_part(l).at_m(m)(x);
  const double gamma = gamma_plus_one<double>(abs_rational(Rational(l - m)));
  return poly / gamma * std::pow((1.0 + x) / (1.0 - x), to_double(m) / 2.0);
}

double legendre_weighted_minus(int l, int lambda, double x) {
  if (l < 0 || lambda < 0) throw InvalidArgument("legendre_weighted_minus: negative index");
  if (!(x >= -1.0 && x <= 1.0)) throw InvalidArgument("legendre_weighted_minus: x outside [-1, 1]");
  const auto& w = weighted_minus_factors(l, lambda);
  double acc = 0.0;
  for (auto it = w.q.rbegin(); it != w.q.rend(); ++it) acc = acc * x + *it;
  return acc * std::pow(1.0 - x, lambda) * std::pow(1.0 + x, static_cast<int>(w.plus_power));
}

Rational legendre_weighted_minus(int l, int lambda, const Rational& x) {
  if (l < 0 || lambda < 0) throw InvalidArgument("legendre_weighted_minus: negative index");
  if (x < -1 || x > 1) throw InvalidArgument("legendre_weighted_minus: x outside [-1, 1]");
  const auto& w = weighted_minus_factors(l, lambda);
  Rational v = w.exact(x);
  const Rational one_minus = 1 - x, one_plus = 1 + x;
  for (int i = 0; i < lambda; ++i) v *= one_minus;
  for (unsigned i = 0; i < w.plus_power; ++i) v *= one_plus;
  return v;
}

Rational legendre_p(int l, const Rational& x) {
  if (l < 0) throw InvalidArgument("legendre_p: negative degree");
  return legendre_polynomial_part(l).at_m(Rational(0))(x) / Rational(factorial(static_cast<unsigned>(l)));
}

double assoc_legendre_recurrence_step(int l, const Rational& m, double x, double p_l, double p_lm1) {
  if (l < 1) throw InvalidArgument("assoc_legendre_recurrence_step: need l >= 1");
  const Rational lm = l - m;
  if (lm == 0 || lm + 1 == 0) throw SingularRecurrence("assoc_legendre_recurrence_step: |l-m| or |l-m+1| vanishes");
  if (m > l - 1) throw SingularRecurrence("assoc_legendre_recurrence_step: relation holds only for m <= l-1");
  const double a = to_double(abs_rational(Rational(lm + 1)));
  const double c = to_double(Rational((l * l - m * m) / abs_rational(lm)));
  return ((2 * l + 1) * x * p_l - c * p_lm1) / a;
}

bool parity_identity_check(int l, const Rational& m, double x) {
  if (l < 0) throw InvalidArgument("parity_identity_check: negative degree");
  const double lhs = assoc_legendre_general(l, m, -x);
  const Rational up = abs_rational(Rational(l + m));
  const Rational down = abs_rational(Rational(l - m));
  double ratio;
  if (is_integer(up) && is_integer(down))
    ratio = to_double(make_rational(factorial(static_cast<unsigned>(up.get_num().get_ui())),
                                    factorial(static_cast<unsigned>(down.get_num().get_ui()))));
  else
    ratio = std::exp(std::lgamma(to_double(up) + 1.0) - std::lgamma(to_double(down) + 1.0));
  const double rhs = (l % 2 == 0 ? 1.0 : -1.0) * ratio * assoc_legendre_general(l, Rational(-m), x);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return std::abs(lhs - rhs) <= 1e-12 * scale || scale == 0.0;
}

bool derivative_identity_check(int l, int m, double x) {
  if (l < 0 || m < -l || m > l) throw InvalidArgument("derivative_identity_check: need -l <= m <= l");
  const auto ul = static_cast<unsigned>(l);
  const RationalPolynomial one_minus_x2({Rational(1), Rational(0), Rational(-1)});
  const RationalPolynomial lhs = one_minus_x2.pow(ul).derivative(static_cast<unsigned>(l + m));

  const RationalPolynomial one_plus_x = RationalPolynomial::linear(1, 1);
  const RationalPolynomial one_minus_x = RationalPolynomial::linear(1, -1);
  // (1-x^2)^l ((1+x)/(1-x))^m = (1+x)^(l+m) (1-x)^(l-m)
  const RationalPolynomial inner =
      one_plus_x.pow(static_cast<unsigned>(l + m)) * one_minus_x.pow(static_cast<unsigned>(l - m));
  RationalPolynomial rhs = inner.derivative(ul);
  if (m > 0) {
    auto q = rhs.divide_by_one_plus_x(static_cast<unsigned>(m));
    if (!q) return false;
    rhs = *q;
  } else if (m < 0) {
    rhs = rhs * one_plus_x.pow(static_cast<unsigned>(-m));
  }
  rhs *= make_rational((m % 2 == 0 ? 1 : -1) * factorial(ul), factorial(static_cast<unsigned>(l - m)));
  if (!(lhs == rhs)) return false;
  const double lv = lhs(x), rv = rhs(x);
  return std::abs(lv - rv) <= 1e-12 * std::max(1.0, std::abs(lv));
}

}  // namespace tribessel
