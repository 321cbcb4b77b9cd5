#include "tribessel/four_bessel.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <numbers>

#include "tribessel/error.hpp"
#include "tribessel/legendre.hpp"
#include "tribessel/quadrature.hpp"
#include "tribessel/triple.hpp"

namespace tribessel {

namespace {

constexpr double kCancellationLimit = 1e4;

void require_indices(const KernelIndices& idx) {
  if (idx.L < 0 || idx.N < 0 || idx.M < 0) throw InvalidArgument("L, N, M must be non-negative");
  if (idx.N + idx.M < idx.L) throw InvalidArgument("N + M must be >= L");
}

}  // namespace

QuadKinematics QuadKinematics::make(double k1, double k2, double k3, double k4) {
  for (double k : {k1, k2, k3, k4})
    if (!(k > 0.0) || !std::isfinite(k)) throw InvalidArgument("momenta must be positive and finite");
  QuadKinematics q{k1, k2, k3, k4, 0, 0};
  q.k_lo = std::max(std::abs(k1 - k2), std::abs(k3 - k4));
  q.k_hi = std::min(k1 + k2, k3 + k4);
  return q;
}

double s_integral(const QuadKinematics& kin, int L, int n_plus_m, int calL, int l, double rel_tol) {
  if (L < 0 || n_plus_m < 0 || calL < 0 || l < 0) throw InvalidArgument("s_integral: negative index");
  if (!kin.quadrilateral()) return 0.0;
  if (kin.k_lo == 0.0 && n_plus_m > L)
    throw DomainError("overlap window reaches K = 0 where K^(-2(N+M)) is not integrable");
  const double a = 2.0 * kin.k1 * kin.k2, b = 2.0 * kin.k3 * kin.k4;
  const double s1 = kin.k1 * kin.k1 + kin.k2 * kin.k2, s2 = kin.k3 * kin.k3 + kin.k4 * kin.k4;
  auto f = [&](double K) {
    const double k2 = K * K;
    const double xi = std::clamp((s1 - k2) / a, -1.0, 1.0);
    const double xip = std::clamp((s2 - k2) / b, -1.0, 1.0);
    return std::pow(K, -2 * n_plus_m) * legendre_weighted_minus(calL, L, xi) * legendre_p(l, xip);
  };
  const auto r = quad::integrate_adaptive(f, kin.k_lo, kin.k_hi, 0.0, rel_tol, 2000);
  return r.value;
}

double upper_first_factor(int L, int n, double k1, double k2, double K) {
  if (L < 0 || n < 0) throw InvalidArgument("upper_first_factor: negative index");
  // c_j: coefficient of r^(n+2j) in j_n(k1 r) j_0(k2 r).
  const auto dfact = [](int m) {
    double f = 1.0;
    for (int i = m; i > 1; i -= 2) f *= i;
    return f;
  };
  const auto fact = [](int m) { return std::tgamma(m + 1.0); };
  double sum = 0.0;
  for (int j = 0; j < L; ++j) {
    double c = 0.0;
    for (int p = 0; p <= j; ++p) {
      const int q = j - p;
      c += std::pow(k1, n + 2 * p) * std::pow(k2, 2 * q) /
           (std::ldexp(fact(p), p) * dfact(2 * n + 2 * p + 1) * fact(2 * q + 1));
    }
    if (j % 2) c = -c;
    sum += c * std::numbers::pi * dfact(2 * n + 2 * j + 1) * std::ldexp(1.0, j - L) /
           (fact(L - j - 1) * std::pow(K, 3 - L + n + 2 * j));
  }
  return sum;
}

double four_bessel_upper_correction(const KernelIndices& idx, const QuadKinematics& kin, double rel_tol) {
  require_indices(idx);
  const double lo = std::max(kin.k1 + kin.k2, std::abs(kin.k3 - kin.k4)), hi = kin.k3 + kin.k4;
  if (idx.L == 0 || !(lo < hi)) return 0.0;
  const int nm = idx.N + idx.M;
  const AngularIndices second{0, idx.N, idx.M, nm};
  auto f = [&](double K) {
    const double g = eval_master(second, TriangleKinematics::make(kin.k3, kin.k4, K)).value;
    return 2.0 / std::numbers::pi * K * K * upper_first_factor(idx.L, nm - idx.L, kin.k1, kin.k2, K) * g;
  };
  return quad::integrate_adaptive(f, lo, hi, 0.0, rel_tol, 2000).value;
}

std::vector<Rational> first_factor_coefficients(int n) {
  if (n < 0) throw InvalidArgument("first_factor_coefficients: negative order");
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
  for (const auto& t : coupling_coefficients(n, 0, n)->terms) {
    if (t.l != t.calL) throw DomainError("unexpected coupling term with l != calL");
    out[t.calL] = t.exact.rational_value();
  }
  return out;
}

IntegralResult eval_four_bessel(const KernelIndices& idx, const QuadKinematics& kin, bool parallel) {
  require_indices(idx);
  IntegralResult r;
  r.method = Method::master;
  r.formula = formula::four_bessel;
  r.kinematic_class = kin.quadrilateral() ? KinematicClass::interior
                      : kin.k_lo == kin.k_hi ? KinematicClass::boundary
                                             : KinematicClass::exterior;
  const double upper = four_bessel_upper_correction(idx, kin);
  r.value = upper;
  if (!kin.quadrilateral()) return r;

  const int nm = idx.N + idx.M;
  const int n = nm - idx.L;
  const auto second = coupling_coefficients(idx.N, idx.M, nm);

  // B_l = sum over calL' of coeff (k4/k3)^calL', grouped by l.
  std::map<int, double> b;
  for (const auto& t : second->terms) b[t.l] += t.value * std::pow(kin.k4 / kin.k3, t.calL);

  struct Cell {
    int calL, l;
    double weight, s = 0.0;
  };
  std::vector<Cell> cells;
  for (int calL = 0; calL <= n; ++calL) {
    const double a = std::pow(-kin.k2 / kin.k1, calL) * to_double(binomial(static_cast<unsigned>(n), static_cast<unsigned>(calL)));
    for (const auto& [l, bl] : b) cells.push_back({calL, l, a * bl});
  }
  // Exceptions must not escape the OpenMP region; the first one is rethrown after it.
  std::exception_ptr failure;
  const long count = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < count; ++i) {
    try {
      cells[i].s = s_integral(kin, idx.L, nm, cells[i].calL, cells[i].l);
    } catch (...) {
#pragma omp critical(four_bessel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  double sum = 0.0, magnitude = 0.0;
  for (const auto& c : cells) {
    sum += c.weight * c.s;
    magnitude += std::abs(c.weight * c.s);
  }
  const double prefactor = std::numbers::pi / (8.0 * kin.k1 * kin.k2 * kin.k3 * kin.k4) *
                           std::pow(kin.k1 * kin.k3, nm) * std::pow(kin.k2, idx.L);
  r.value = prefactor * sum + upper;
  r.error_estimate = 1e-12 * (std::abs(prefactor) * magnitude + std::abs(upper));
  // Near K_lo -> 0 the K^(-2(N+M)) weight makes single S terms huge while the sum stays
  // small; the closure integrand has no such cancellation.
  if (magnitude > kCancellationLimit * std::abs(sum)) {
    const auto c = eval_four_bessel_closure(idx, kin);
    r.value = c.value;
    r.error_estimate = c.error_estimate;
  }
  return r;
}

IntegralResult eval_four_bessel_closure(const KernelIndices& idx, const QuadKinematics& kin) {
  require_indices(idx);
  IntegralResult r;
  r.method = Method::master;
  r.formula = formula::four_bessel;
  r.kinematic_class = kin.quadrilateral() ? KinematicClass::interior : KinematicClass::exterior;
  const double upper = four_bessel_upper_correction(idx, kin);
  r.value = upper;
  if (!kin.quadrilateral()) return r;
  const int nm = idx.N + idx.M;
  const AngularIndices first{idx.L, nm - idx.L, 0, nm - idx.L};
  const AngularIndices second{0, idx.N, idx.M, nm};
  auto f = [&](double K) {
    const auto a = eval_master(first, TriangleKinematics::make(kin.k1, kin.k2, K));
    const auto b = eval_master(second, TriangleKinematics::make(kin.k3, kin.k4, K));
    return 2.0 / std::numbers::pi * K * K * a.value * b.value;
  };
  const auto q = quad::integrate_adaptive(f, kin.k_lo, kin.k_hi, 0.0, 1e-13, 2000);
  r.value = q.value + upper;
  r.error_estimate = q.error;
  return r;
}

}  // namespace tribessel
