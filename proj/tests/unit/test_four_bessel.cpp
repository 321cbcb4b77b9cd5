#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tribessel/error.hpp"
#include "tribessel/exact.hpp"
#include "tribessel/four_bessel.hpp"
#include "tribessel/oracle.hpp"

using namespace tribessel;
using std::numbers::pi;

namespace {

QuadKinematics qk(double a, double b, double c, double d) { return QuadKinematics::make(a, b, c, d); }

double analytic(int L, int N, int M, double a, double b, double c, double d) {
  return eval_four_bessel({L, N, M}, qk(a, b, c, d)).value;
}

double oracle(int L, int N, int M, double a, double b, double c, double d) {
  return oracle_quadruple(L, N, M, a, b, c, d).value;
}

}  // namespace

TEST_SUITE("four_bessel") {
  TEST_CASE("window") {
    const auto q = qk(2, 1, 1.5, 1);
    CHECK(q.k_lo == 1.0);
    CHECK(q.k_hi == 2.5);
    CHECK(q.quadrilateral());
    CHECK_FALSE(qk(1, 1, 5, 1).quadrilateral());
    CHECK_THROWS_AS(qk(1, 0, 1, 1), InvalidArgument);
  }

  TEST_CASE("S integral") {
    CHECK(s_integral(qk(1, 1, 5, 1), 0, 0, 0, 0) == 0.0);
    CHECK(s_integral(qk(1, 1, 1, 1), 0, 0, 0, 0) == doctest::Approx(2.0).epsilon(1e-14));
    const double a = s_integral(qk(2, 1, 1.5, 1), 1, 1, 1, 1, 1e-10);
    const double b = s_integral(qk(2, 1, 1.5, 1), 1, 1, 1, 1, 5e-11);
    CHECK(a == doctest::Approx(b).epsilon(1e-10));
    CHECK(a != 0.0);
    CHECK_THROWS_AS(s_integral(qk(1, 1, 1, 1), 0, 1, 0, 0), DomainError);
    CHECK_THROWS_AS(s_integral(qk(2, 1, 1.5, 1), -1, 1, 0, 0), InvalidArgument);
  }

  TEST_CASE("first-factor coefficients") {
    for (int n = 0; n <= 6; ++n) {
      const auto c = first_factor_coefficients(n);
      REQUIRE(c.size() == static_cast<std::size_t>(n + 1));
      for (int calL = 0; calL <= n; ++calL) {
        const Rational expect = (calL % 2 ? -1 : 1) * Rational(binomial(n, calL));
        CHECK(c[calL] == expect);
      }
    }
  }

  TEST_CASE("all-zero orders") {
    const auto r = eval_four_bessel({0, 0, 0}, qk(1, 1, 1, 1));
    CHECK(r.value == doctest::Approx(pi / 4).epsilon(1e-12));
    CHECK(r.value == doctest::Approx(oracle(0, 0, 0, 1, 1, 1, 1)).epsilon(1e-8));
    CHECK(r.formula == formula::four_bessel);
  }

  TEST_CASE("oracle agreement on examples") {
    CHECK(analytic(0, 1, 0, 1.3, 0.8, 1.1, 0.9) == doctest::Approx(oracle(0, 1, 0, 1.3, 0.8, 1.1, 0.9)).epsilon(1e-4));
    CHECK(analytic(1, 1, 0, 2, 1, 1.5, 1) == doctest::Approx(oracle(1, 1, 0, 2, 1, 1.5, 1)).epsilon(1e-4));
    for (auto [N, M] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{0, 2}, std::pair{2, 1}})
      CHECK(analytic(N + M, N, M, 1.4, 0.7, 1.2, 0.95) ==
            doctest::Approx(oracle(N + M, N, M, 1.4, 0.7, 1.2, 0.95)).epsilon(1e-4));
  }

  TEST_CASE("upper first factor") {
    CHECK(upper_first_factor(0, 2, 1.0, 0.5, 2.0) == 0.0);
    for (int L = 1; L <= 3; ++L)
      for (int n = 0; n <= 2; ++n) {
        OscillatoryIntegralSpec s;
        s.power = 2 - L;
        s.factors = {{n, 0.7}, {0, 0.5}, {n + L, 1.6}};
        CHECK(upper_first_factor(L, n, 0.7, 0.5, 1.6) ==
              doctest::Approx(integrate_oscillatory(s).value).epsilon(1e-7));
      }
  }

  TEST_CASE("second pair reaching past the first") {
    // k3 + k4 > k1 + k2: the piece above the first triangle matters once L >= 1.
    const auto q = qk(0.6, 0.5, 1.3, 0.9);
    CHECK(four_bessel_upper_correction({1, 1, 0}, q) != 0.0);
    CHECK(four_bessel_upper_correction({0, 1, 0}, q) == 0.0);
    CHECK(analytic(1, 1, 0, 0.6, 0.5, 1.3, 0.9) == doctest::Approx(oracle(1, 1, 0, 0.6, 0.5, 1.3, 0.9)).epsilon(1e-4));
    CHECK(analytic(2, 1, 1, 0.6, 0.5, 1.3, 0.9) == doctest::Approx(oracle(2, 1, 1, 0.6, 0.5, 1.3, 0.9)).epsilon(1e-4));
    // Empty overlap window, yet the kernel does not vanish.
    const auto e = qk(0.3, 0.2, 2.0, 1.2);
    REQUIRE_FALSE(e.quadrilateral());
    const double v = analytic(1, 1, 0, 0.3, 0.2, 2.0, 1.2);
    CHECK(v != 0.0);
    CHECK(v == doctest::Approx(oracle(1, 1, 0, 0.3, 0.2, 2.0, 1.2)).epsilon(1e-4));
  }

  TEST_CASE("window shrinking to empty drives the kernel to zero") {
    // k3 + k4 falls to |k1 - k2| = 2 as k4 -> 1.
    double previous = std::abs(analytic(1, 1, 1, 3, 1, 1, 1.3));
    for (double k4 : {1.2, 1.1, 1.05, 1.01, 1.001}) {
      const double v = std::abs(analytic(1, 1, 1, 3, 1, 1, k4));
      CHECK(v < previous);
      previous = v;
    }
    CHECK(previous < 1e-6);
    CHECK(analytic(1, 1, 1, 3, 1, 1, 0.99) == 0.0);
    CHECK(std::abs(oracle(1, 1, 1, 3, 1, 1, 0.99)) < 1e-8);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(eval_four_bessel({0, 1, 0}, qk(1, 1, 1, 1)), DomainError);
    CHECK_THROWS_AS(eval_four_bessel({3, 1, 1}, qk(2, 1, 1.5, 1)), InvalidArgument);
  }

  TEST_CASE("serial and parallel term sums agree bit for bit") {
    const auto q = qk(1.4, 0.7, 1.2, 0.95);
    for (auto idx : {KernelIndices{0, 2, 1}, KernelIndices{1, 1, 2}})
      CHECK(eval_four_bessel(idx, q, false).value == eval_four_bessel(idx, q, true).value);
  }
}
