#include "tribessel/bessel.hpp"

#include <cmath>

#include "tribessel/error.hpp"
#include "tribessel/quadrature.hpp"

namespace tribessel {

namespace {

// x^n/(2n+1)!! sum_k (-x^2/2)^k / (k! (2n+3)(2n+5)...(2n+2k+1)), used for x < 1.
double series(int n, double x) {
  double lead = 1.0;
  for (int k = 1; k <= n; ++k) lead *= x / (2 * k + 1);
  const double y = -0.5 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= y / (k * (2 * n + 2 * k + 1));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return lead * sum;
}

double j0_trig(double x) { return std::sin(x) / x; }
double j1_trig(double x) { return (std::sin(x) / x - std::cos(x)) / x; }

double upward(int n, double x) {
  double prev = j0_trig(x);
  if (n == 0) return prev;
  double cur = j1_trig(x);
  for (int k = 1; k < n; ++k) {
    const double next = (2 * k + 1) / x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double miller(int n, double x) {
  const int start = n + 20 + static_cast<int>(std::sqrt(40.0 * n)) + static_cast<int>(x);
  double up = 0.0;        // j_{k+1}, unnormalized
  double cur = 1e-300;    // j_k
  double at_n = 0.0, at_0 = 0.0, at_1 = 0.0;
  for (int k = start; k >= 0; --k) {
    if (k == n) at_n = cur;
    if (k == 1) at_1 = cur;
    if (k == 0) {
      at_0 = cur;
      break;
    }
    const double down = (2 * k + 1) / x * cur - up;
    up = cur;
    cur = down;
    if (std::abs(cur) > 1e250) {
      up *= 1e-250;
      cur *= 1e-250;
      at_n *= 1e-250;
      at_1 *= 1e-250;
    }
  }
  // Normalize against whichever of j_0, j_1 is further from a zero.
  const double j0 = j0_trig(x), j1 = j1_trig(x);
  return std::abs(j0) >= std::abs(j1) ? at_n * (j0 / at_0) : at_n * (j1 / at_1);
}

}  // namespace

double sph_bessel_j(int n, double x) {
  if (n < 0) throw InvalidArgument("sph_bessel_j: negative order");
  if (!(x >= 0.0)) throw InvalidArgument("sph_bessel_j: negative argument");
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  if (x < 1.0) return series(n, x);
  if (x >= n) return upward(n, x);
  return miller(n, x);
}

bool half_integral_check(int lambda3, double K, double r) {
  if (lambda3 < 0 || !(K > 0.0) || !(r > 0.0)) throw InvalidArgument("half_integral_check: need lambda3 >= 0, K > 0, r > 0");
  const auto f = [&](double k) { return std::pow(k, lambda3 + 2) * sph_bessel_j(lambda3, k * r); };
  const auto q = quad::integrate_adaptive(f, 0.0, K, 0.0, 1e-12);
  const double rhs = std::pow(K, lambda3 + 2) * sph_bessel_j(lambda3 + 1, K * r) / r;
  const double scale = std::max(std::abs(rhs), q.l1);
  return std::abs(q.value - rhs) <= 1e-9 * scale;
}

}  // namespace tribessel
