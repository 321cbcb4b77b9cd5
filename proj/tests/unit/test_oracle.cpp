#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "tribessel/error.hpp"
#include "tribessel/oracle.hpp"
#include "tribessel/triple.hpp"
#include "tribessel/verify.hpp"

using namespace tribessel;
using std::numbers::pi;

namespace {

double analytic(const AngularIndices& ang, double k1, double k2, double k3) {
  return evaluate_analytic(ang, TriangleKinematics::make(k1, k2, k3)).value;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("examples") {
    const auto r = oracle_triple({1, 0, 0, 0}, 1, 1, 1);
    CHECK(r.method == Method::oracle);
    CHECK(r.value == doctest::Approx(pi / 8).epsilon(1e-6));
    CHECK(r.value == doctest::Approx(analytic({1, 0, 0, 0}, 1, 1, 1)).epsilon(1e-6));
    CHECK(std::abs(oracle_triple({0, 0, 0, 0}, 1, 1, 5).value) < 1e-6);
    CHECK(oracle_triple({0, 1, 1, 2}, 1.2, 0.9, 1.4).value ==
          doctest::Approx(analytic({0, 1, 1, 2}, 1.2, 0.9, 1.4)).epsilon(2e-5));
    CHECK(oracle_triple({2, 1, 1, 0}, 1, 1, 1).value == doctest::Approx(analytic({2, 1, 1, 0}, 1, 1, 1)).epsilon(1e-6));
  }

  TEST_CASE("halving the tolerance stays inside the reported error") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    std::uniform_int_distribution<int> order(0, 2), lam(0, 2);
    int done = 0;
    while (done < 30) {
      const AngularIndices ang{lam(rng), order(rng), order(rng), order(rng)};
      const double k1 = u(rng), k2 = u(rng), k3 = u(rng);
      const auto a = oracle_triple(ang, k1, k2, k3, 1e-8);
      const auto b = oracle_triple(ang, k1, k2, k3, 5e-9);
      CHECK(std::abs(a.value - b.value) <= a.error_estimate + b.error_estimate);
      CHECK(a.error_estimate <= 1e-8 * std::max(1.0, std::abs(a.value)));
      ++done;
    }
  }

  TEST_CASE("Gradshteyn values above the triangle") {
    for (int l1 = 0; l1 <= 2; ++l1)
      for (int l2 = 0; l1 + l2 <= 4 && l2 <= 4; ++l2) {
        const double k1 = 0.8, k2 = 1.1, K = 2.3;
        CHECK(oracle_triple({1, l1, l2, l1 + l2}, k1, k2, K).value ==
              doctest::Approx(gradshteyn_value(l1, l2, l1 + l2, k1, k2, K)).epsilon(1e-5));
      }
  }

  TEST_CASE("windowed and contour tails agree") {
    OracleOptions w;
    w.tail = TailMethod::windowed;
    for (const AngularIndices ang : {AngularIndices{1, 0, 0, 0}, AngularIndices{0, 1, 1, 0}, AngularIndices{2, 1, 2, 1}}) {
      const double c = oracle_triple(ang, 1.1, 0.8, 1.3, 1e-9).value;
      CHECK(oracle_triple(ang, 1.1, 0.8, 1.3, 1e-9, w).value == doctest::Approx(c).epsilon(1e-7));
    }
  }

  TEST_CASE("four factors") {
    CHECK(oracle_quadruple(0, 0, 0, 1, 1, 1, 1).value == doctest::Approx(pi / 4).epsilon(1e-9));
    OracleOptions w;
    w.tail = TailMethod::windowed;
    CHECK(oracle_quadruple(0, 0, 0, 1, 1, 1, 1, 1e-9, w).value == doctest::Approx(pi / 4).epsilon(1e-8));
    CHECK_THROWS_AS(oracle_quadruple(2, 1, 0, 1, 1, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(oracle_quadruple(0, 0, 0, 1, 1, 0, 1), InvalidArgument);
  }

  TEST_CASE("a zero wavenumber drops or kills its factor") {
    OscillatoryIntegralSpec s;
    s.power = 2;
    s.factors = {{1, 1.2}, {0, 0.9}, {1, 1.5}, {0, 0.0}};
    CHECK(integrate_oscillatory(s).value == doctest::Approx(oracle_triple({0, 1, 0, 1}, 1.2, 0.9, 1.5).value).epsilon(1e-8));
    s.factors.back() = {2, 0.0};
    CHECK(integrate_oscillatory(s).value == 0.0);
  }

  TEST_CASE("domain checks") {
    CHECK_THROWS_AS(oracle_triple({1, 0, 0, 0}, 1, 1, 1, 1e-11), InvalidArgument);
    CHECK_THROWS_AS(oracle_triple({-1, 0, 0, 0}, 1, 1, 1), ConvergenceDomain);
    // The third order carries +lambda, so the origin is always integrable here.
    CHECK(oracle_triple({3, 0, 0, 0}, 1.1, 0.9, 1.3).value ==
          doctest::Approx(analytic({3, 0, 0, 0}, 1.1, 0.9, 1.3)).epsilon(1e-6));
    OscillatoryIntegralSpec s;
    s.power = 2;
    s.factors = {{0, 1.0}, {0, 1.0}};
    CHECK_THROWS_AS(integrate_oscillatory(s), ConvergenceDomain);
  }

  TEST_CASE("odd parity is evaluated and flagged") {
    const auto r = oracle_triple({1, 1, 0, 0}, 1.1, 0.9, 1.3);
    CHECK(r.outside_closed_form_scope);
    CHECK(std::isfinite(r.value));
    CHECK_FALSE(oracle_triple({1, 1, 1, 0}, 1.1, 0.9, 1.3).outside_closed_form_scope);
  }
}
