#include "tribessel/triple.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "tribessel/error.hpp"
#include "tribessel/legendre.hpp"
#include "tribessel/wigner.hpp"

namespace tribessel {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

int parity_sign(int n) { return (std::abs(n) % 2 == 0) ? 1 : -1; }

void require_indices(const AngularIndices& ang) {
  if (ang.lambda < 0) throw ConvergenceDomain("lambda < 0: the integral diverges at the origin");
  if (ang.l1 < 0 || ang.l2 < 0 || ang.l3 < 0) throw InvalidArgument("negative Bessel order");
}

void require_master(int l1, int l2, int l3) {
  if ((l1 + l2 + l3) % 2 != 0)
    throw ParityViolation("l1 + l2 + l3 is odd: the (l1 l2 l3; 000) divisor vanishes");
  if (!triangle(l1, l2, l3)) throw DomainError("indices violate the triangle condition |l1-l2| <= l3 <= l1+l2");
}

std::shared_ptr<const CouplingCoefficients> build_coefficients(int l1, int l2, int l3) {
  auto out = std::make_shared<CouplingCoefficients>();
  out->l1 = l1;
  out->l2 = l2;
  out->l3 = l3;
  const RadicalRational divisor = three_j0(l1, l2, l3);
  // i^(l1+l2-l3) is real under even parity.
  const int phase = parity_sign((l1 + l2 - l3) / 2);
  const RadicalRational common = RadicalRational(phase, Rational(2 * l3 + 1)) / divisor;
  const auto ul3 = static_cast<unsigned>(l3);
  for (int calL = 0; calL <= l3; ++calL) {
    const int rest = l3 - calL;
    const RadicalRational binom =
        RadicalRational::sqrt_of(Rational(binomial(2 * ul3, 2 * static_cast<unsigned>(calL))));
    for (int l = std::abs(l1 - rest); l <= l1 + rest; ++l) {
      if ((l1 + rest + l) % 2 != 0 || (l2 + calL + l) % 2 != 0) continue;
      const RadicalRational a = three_j0(l1, rest, l);
      const RadicalRational b = three_j0(l2, calL, l);
      if (a.is_zero() || b.is_zero()) continue;
      const RadicalRational six = six_j({l1, l2, l3, calL, rest, l});
      if (six.is_zero()) continue;
      const RadicalRational term =
          common * binom * RadicalRational::from_rational(Rational(2 * l + 1)) * a * b * six;
      out->terms.push_back({calL, l, term, term.to_double()});
    }
  }
  return out;
}

struct SumResult {
  double value = 0.0;
  double magnitude = 0.0;  // sum of |terms|
  std::size_t count = 0;
};

using Wide = boost::multiprecision::cpp_bin_float_50;

Wide to_wide(const Rational& q) { return Wide(q.get_num().get_str()) / Wide(q.get_den().get_str()); }

// sum over terms of coeff (k2/k1)^calL (1-x^2)^(lambda/2) P_l^{-lambda}(x). Each term
// is sign sqrt(q) times an exact rational at the exact x; only the square roots
// are rounded, to 50 digits, so cancellation between terms costs nothing at double
// precision even for thin triangles.
SumResult coupling_sum(const CouplingCoefficients& c, int lambda, const Rational& ratio, const Rational& x) {
  SumResult s;
  Wide acc = 0, magnitude = 0;
  std::vector<Rational> ratio_pow{Rational(1)};
  for (const auto& t : c.terms) {
    while (static_cast<int>(ratio_pow.size()) <= t.calL) ratio_pow.push_back(ratio_pow.back() * ratio);
    const Rational r = ratio_pow[t.calL] * legendre_weighted_minus(t.l, lambda, x);
    const Wide v = t.exact.sign() * boost::multiprecision::sqrt(to_wide(t.exact.square())) * to_wide(r);
    acc += v;
    magnitude += abs(v);
  }
  s.value = static_cast<double>(acc);
  s.magnitude = static_cast<double>(magnitude);
  s.count = c.terms.size();
  return s;
}

Rational clamped_delta(double k1, double k2, double k3) {
  const Rational a = exact_rational(k1), b = exact_rational(k2), c = exact_rational(k3);
  Rational d = (a * a + b * b - c * c) / (2 * a * b);
  if (d > 1) d = 1;
  if (d < -1) d = -1;
  return d;
}

// Rounding of the final sum and of the prefactor; the terms themselves carry ~1e-50.
double sum_error(const SumResult& s, double prefactor) {
  return kEps * 8.0 * std::abs(prefactor * s.value) + 1e-45 * std::abs(prefactor) * s.magnitude;
}


}  // namespace

std::shared_ptr<const CouplingCoefficients> coupling_coefficients(int l1, int l2, int l3) {
  require_master(l1, l2, l3);
  static std::mutex lock;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const CouplingCoefficients>> cache;
  {
    std::lock_guard guard(lock);
    auto it = cache.find({l1, l2, l3});
    if (it != cache.end()) return it->second;
  }
  auto built = build_coefficients(l1, l2, l3);
  std::lock_guard guard(lock);
  return cache.emplace(std::tuple{l1, l2, l3}, std::move(built)).first->second;
}

IntegralResult eval_master(const AngularIndices& ang, const TriangleKinematics& kin) {
  require_indices(ang);
  require_master(ang.l1, ang.l2, ang.l3);
  IntegralResult r;
  r.method = Method::master;
  r.kinematic_class = kin.kinematic_class;
  r.formula = formula::master;
  if (kin.kinematic_class == KinematicClass::exterior) {
    if (ang.lambda != 0)
      throw OutsideDerivationDomain("momenta do not form a triangle; no closed form for lambda >= 1 here");
    r.value = 0.0;
    r.formula = formula::triangle_support;
    return r;
  }
  const auto coeffs = coupling_coefficients(ang.l1, ang.l2, ang.l3);
  const SumResult s = coupling_sum(*coeffs, ang.lambda, exact_rational(kin.k2) / exact_rational(kin.k1),
                                   clamped_delta(kin.k1, kin.k2, kin.k3));
  const double prefactor = std::numbers::pi * kin.beta / (4.0 * kin.k1 * kin.k2 * kin.k3) *
                           std::pow(kin.k1 / kin.k3, ang.l3) *
                           std::pow(kin.k1 * kin.k2 / kin.k3, ang.lambda);
  r.value = prefactor * s.value;
  r.error_estimate = sum_error(s, prefactor);
  return r;
}

IntegralResult eval_lambda1_general(int l1, int l2, int l3, double k1, double k2, double K) {
  if (l1 < 0 || l2 < 0 || l3 < 0) throw InvalidArgument("negative Bessel order");
  require_master(l1, l2, l3);
  if (!(k1 > 0 && k2 > 0 && K > 0)) throw InvalidArgument("momenta must be positive");
  const double delta = (k1 * k1 + k2 * k2 - K * K) / (2.0 * k1 * k2);
  IntegralResult r;
  r.method = Method::lambda1_general;
  r.kinematic_class = classify(delta);
  r.formula = formula::lambda1;

  const double beta = beta_of(delta);
  if (beta > 0.0) {
    const auto coeffs = coupling_coefficients(l1, l2, l3);
    const SumResult s = coupling_sum(*coeffs, 1, exact_rational(k2) / exact_rational(k1), clamped_delta(k1, k2, K));
    const double prefactor = std::numbers::pi * beta / (4.0 * K * K) * std::pow(k1 / K, l3);
    r.value += prefactor * s.value;
    r.error_estimate += sum_error(s, prefactor);
  }
  // theta[K - (k1+k2)] in the same half-maximum convention: Delta' < -1.
  const double theta = std::abs(delta + 1.0) <= kBoundaryTolerance ? 0.5 : delta < -1.0 ? 1.0 : 0.0;
  if (theta > 0.0 && l3 == l1 + l2) {
    const auto ul2 = static_cast<unsigned>(l2);
    const auto ul3 = static_cast<unsigned>(l3);
    const RadicalRational c =
        RadicalRational(parity_sign(l3), Rational(Rational(2 * l3 + 1) * binomial(2 * ul3, 2 * ul2) /
                                                  Rational((2 * l1 + 1) * (2 * l1 + 1) * (2 * l2 + 1) * (2 * l2 + 1)))) /
        three_j0(l1, l2, l3);
    const double term = theta * std::numbers::pi / 2.0 * std::pow(k1, l1) * std::pow(k2, l2) /
                        std::pow(K, l3 + 2) * c.to_double();
    r.value += term;
    r.error_estimate += 8.0 * kEps * std::abs(term);
  }
  return r;
}

IntegralResult eval_gervois(const AngularIndices& ang, const TriangleKinematics& kin) {
  require_indices(ang);
  if (!ang.even_parity()) throw ParityViolation("l1 + l2 + l3 is odd: the reduced sum is not real");
  if (kin.beta == 0.0) throw OutsideDerivationDomain("reduced sum is restricted to triangle momenta");

  const Rational k1 = exact_rational(kin.k1), k2 = exact_rational(kin.k2), k3 = exact_rational(kin.k3);
  const Rational ks = k1 + k2 + k3;
  const Rational c1 = -k1 + k2 + k3, c2 = k1 - k2 + k3, c3 = k1 + k2 - k3;
  const int n1 = ang.l1, n2 = ang.l2, n3 = ang.l3 + ang.lambda;
  const int max_power = n1 + n2 + n3 + ang.lambda;

  const auto powers = [&](const Rational& base) {
    std::vector<Rational> p(static_cast<std::size_t>(max_power) + 1);
    p[0] = 1;  // 0^0 = 1 at degenerate kinematics
    for (int i = 1; i <= max_power; ++i) p[i] = p[i - 1] * base;
    return p;
  };
  const auto ps = powers(ks), p1 = powers(c1), p2 = powers(c2), p3 = powers(c3);

  // (-1)^m (n+m)! / ((n-m)! m! (2k)^(m+1))
  const auto weights = [](int n, const Rational& k) {
    std::vector<Rational> w;
    const Rational two_k = 2 * k;
    Rational pow_k = two_k;
    for (int m = 0; m <= n; ++m) {
      const Integer num = factorial(static_cast<unsigned>(n + m));
      const Integer den = factorial(static_cast<unsigned>(n - m)) * factorial(static_cast<unsigned>(m));
      Rational v = make_rational(num, den) / pow_k;
      if (m % 2 != 0) v = -v;
      w.push_back(v);
      pow_k *= two_k;
    }
    return w;
  };
  const auto w1 = weights(n1, k1), w2 = weights(n2, k2), w3 = weights(n3, k3);

  std::vector<Rational> inv_factorial(static_cast<std::size_t>(max_power) + 1);
  for (int i = 0; i <= max_power; ++i) inv_factorial[i] = make_rational(1, factorial(static_cast<unsigned>(i)));

  Rational sum = 0;
  for (int m1 = 0; m1 <= n1; ++m1) {
    for (int m2 = 0; m2 <= n2; ++m2) {
      const Rational w12 = w1[m1] * w2[m2];
      for (int m3 = 0; m3 <= n3; ++m3) {
        const int M = m1 + m2 + m3 + ang.lambda;
        Rational bracket = ps[M];
        bracket -= parity_sign(n1 + m1) * p1[M];
        bracket -= parity_sign(n2 + m2) * p2[M];
        bracket -= parity_sign(n3 + m3) * p3[M];
        sum += w12 * w3[m3] * inv_factorial[M] * bracket;
      }
    }
  }
  // i^(l1+l2+l3), real under even parity.
  const int phase = parity_sign((ang.l1 + ang.l2 + ang.l3) / 2);
  IntegralResult r;
  r.method = Method::gervois;
  r.kinematic_class = kin.kinematic_class;
  r.formula = formula::gervois;
  r.value = -std::numbers::pi * kin.beta * phase * to_double(sum);
  r.error_estimate = 4.0 * kEps * std::abs(r.value);
  return r;
}

IntegralResult eval_special_case(int lambda, int l_prime, const TriangleKinematics& kin) {
  if (lambda < 0) throw ConvergenceDomain("lambda < 0: the integral diverges at the origin");
  if (l_prime < 0) throw InvalidArgument("negative Bessel order");
  if (kin.beta == 0.0) throw OutsideDerivationDomain("special case needs triangle momenta");
  IntegralResult r;
  r.method = Method::special_case;
  r.kinematic_class = kin.kinematic_class;
  r.formula = formula::special_case;
  const double prefactor = std::numbers::pi * kin.beta / (4.0 * kin.k1 * kin.k2 * kin.k3) *
                           std::pow(kin.k1 * kin.k2 / kin.k3, lambda);
  const double w = to_double(legendre_weighted_minus(l_prime, lambda, clamped_delta(kin.k1, kin.k2, kin.k3)));
  r.value = prefactor * w;
  r.error_estimate = 16.0 * kEps * std::abs(r.value);
  return r;
}

SumRuleSides sum_rule_sides(int lambda, double k1, double k2, double k3) {
  if (lambda < 0) throw InvalidArgument("sum rule: negative lambda");
  if (!(k1 > 0 && k2 > 0 && k3 > 0)) throw InvalidArgument("sum rule: momenta must be positive");
  const double eta = (k1 * k1 + k2 * k2 - k3 * k3) / (2 * k1 * k2);
  const double eta_p = (k1 * k1 + k3 * k3 - k2 * k2) / (2 * k1 * k3);
  const double b = beta_of(eta), bp = beta_of(eta_p);
  // Exact in the binary momenta: the left side is an alternating sum whose terms
  // exceed the result by up to (2 k1 / k3)^lambda.
  SumRuleSides s;
  if (b > 0) {
    const Rational x = clamped_delta(k1, k2, k3), ratio = -exact_rational(k2) / exact_rational(k1);
    Rational sum = 0, p = 1;
    for (int j = 0; j <= lambda; ++j, p *= ratio)
      sum += Rational(binomial(static_cast<unsigned>(lambda), static_cast<unsigned>(j))) * p * legendre_p(j, x);
    s.lhs = b * to_double(sum);
  }
  if (bp > 0) {
    Rational p = 1;
    const Rational ratio = exact_rational(k3) / exact_rational(k1);
    for (int j = 0; j < lambda; ++j) p *= ratio;
    s.rhs = bp * to_double(p * legendre_p(lambda, clamped_delta(k1, k3, k2)));
  }
  return s;
}

bool sum_rule_check(int lambda, double k1, double k2, double k3) {
  const auto [lhs, rhs] = sum_rule_sides(lambda, k1, k2, k3);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale == 0.0 || std::abs(lhs - rhs) <= 1e-11 * scale;
}

IntegralResult evaluate_analytic(const AngularIndices& ang, const TriangleKinematics& kin) {
  if (ang.lambda == 1) return eval_lambda1_general(ang.l1, ang.l2, ang.l3, kin.k1, kin.k2, kin.k3);
  return eval_master(ang, kin);
}

}  // namespace tribessel
