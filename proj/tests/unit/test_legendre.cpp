#include <cmath>

#include "doctest.h"
#include "tribessel/error.hpp"
#include "tribessel/legendre.hpp"
#include "tribessel/verify.hpp"

using namespace tribessel;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace

TEST_SUITE("legendre") {
  TEST_CASE("legendre_p examples") {
    CHECK(legendre_p(0, 0.3) == 1.0);
    CHECK(legendre_p(1, 0.3) == doctest::Approx(0.3).epsilon(1e-16));
    CHECK(legendre_p(4, 0.5) == doctest::Approx(-0.2890625).epsilon(1e-15));
    CHECK(legendre_p(4, q(1, 2)) == q(-37, 128));
    CHECK_THROWS_AS(legendre_p(-1, 0.2), InvalidArgument);
  }

  TEST_CASE("jacobi_p examples") {
    CHECK(jacobi_p(0, q(7, 3), q(-5, 2), 0.4) == 1.0);
    for (const Rational& m : {q(-7, 2), q(1, 3), q(2)})
      CHECK(jacobi_p(1, -m, m, 0.35) == doctest::Approx(0.35 - to_double(m)).epsilon(1e-15));
    CHECK(jacobi_p(2, q(0), q(0), 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
    // The explicit binomial sum is the independent route.
    for (int n = 0; n <= 6; ++n) {
      const auto poly = jacobi_polynomial(n, q(3, 2), q(-1, 3));
      CHECK(jacobi_p(n, q(3, 2), q(-1, 3), 0.27) == doctest::Approx(poly(0.27)).epsilon(1e-13));
    }
  }

  TEST_CASE("assoc_legendre_general examples") {
    for (const Rational& m : {q(-5, 2), q(1, 2), q(3)}) {
      const double md = to_double(m), x = 0.45;
      CHECK(assoc_legendre_general(0, m, x) ==
            doctest::Approx(std::pow((1 + x) / (1 - x), md / 2) / std::tgamma(std::abs(md) + 1)).epsilon(1e-14));
    }
    CHECK(assoc_legendre_general(1, q(0), 0.7) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(assoc_legendre_general(2, q(-3), 0.5) == doctest::Approx(13.25 / 120 * std::pow(3.0, -1.5)).epsilon(1e-14));
  }

  TEST_CASE("classical orders agree with Rodrigues") {
    for (int l = 0; l <= 8; ++l)
      for (int m = -l; m <= l; ++m)
        for (double x : {-0.97, -0.41, 0.0, 0.23, 0.88})
          CHECK(assoc_legendre_general(l, Rational(m), x) == doctest::Approx(rodrigues_legendre(l, m, x)).epsilon(1e-12));
    // Condon-Shortley phase: P_1^1 = -sqrt(1-x^2)
    CHECK(assoc_legendre_general(1, q(1), 0.6) == doctest::Approx(-0.8).epsilon(1e-15));
  }

  TEST_CASE("long double overload matches") {
    for (const Rational& m : {q(-7, 2), q(-2), q(1, 2), q(7, 2)})
      for (long double x : {-0.6L, 0.1L, 0.8L})
        CHECK(static_cast<double>(assoc_legendre_general(3, m, x)) ==
              doctest::Approx(assoc_legendre_general(3, m, static_cast<double>(x))).epsilon(1e-15));
  }

  TEST_CASE("endpoints") {
    CHECK(assoc_legendre_general(3, q(0), -1.0) == -1.0);
    CHECK(assoc_legendre_general(3, q(2), 1.0) == 0.0);
    CHECK(assoc_legendre_general(2, q(-7, 2), 1.0) == 0.0);
    CHECK_THROWS_AS(assoc_legendre_general(2, q(7, 2), 1.0), DomainError);
    CHECK_THROWS_AS(assoc_legendre_general(2, q(1), 1.5), InvalidArgument);
  }

  TEST_CASE("recurrence step examples") {
    const double x = 0.5;
    CHECK(assoc_legendre_recurrence_step(1, q(0), x, x, 1.0) == doctest::Approx((3 * x * x - 1) / 2).epsilon(1e-15));
    // P_2^{-2} from P_1^{-2} and P_0^{-2}
    const double p1 = assoc_legendre_general(1, q(-2), x), p0 = assoc_legendre_general(0, q(-2), x);
    CHECK(assoc_legendre_recurrence_step(1, q(-2), x, p1, p0) ==
          doctest::Approx(assoc_legendre_general(2, q(-2), x)).epsilon(1e-13));
    const double p3 = assoc_legendre_recurrence_step(2, q(-1), 0.25, assoc_legendre_general(2, q(-1), 0.25),
                                                     assoc_legendre_general(1, q(-1), 0.25));
    CHECK(p3 == doctest::Approx(assoc_legendre_general(3, q(-1), 0.25)).epsilon(1e-13));
    CHECK_THROWS_AS(assoc_legendre_recurrence_step(2, q(2), 0.3, 0.1, 0.1), SingularRecurrence);
  }

  TEST_CASE("parity and derivative identities") {
    CHECK(parity_identity_check(0, q(1, 2), 0.3));
    CHECK(parity_identity_check(2, q(-3), 0.6));
    CHECK(parity_identity_check(1, q(0), 0.5));
    CHECK(derivative_identity_check(1, 1, 0.2));
    CHECK(derivative_identity_check(0, 0, -0.7));
    CHECK(derivative_identity_check(3, -2, -0.4));
  }

  TEST_CASE("polynomial form and weighted product form") {
    for (int l = 0; l <= 6; ++l)
      for (const Rational& m : {q(-5, 2), q(-1), q(2, 3), q(4)})
        CHECK(assoc_legendre_polynomial_form(l, m, 0.37) ==
              doctest::Approx(assoc_legendre_general(l, m, 0.37)).epsilon(1e-13));
    for (int l = 0; l <= 6; ++l)
      for (int lambda = 0; lambda <= 4; ++lambda)
        for (double x : {-0.8, 0.1, 0.9}) {
          const double direct = std::pow(1 - x * x, lambda / 2.0) * assoc_legendre_general(l, Rational(-lambda), x);
          CHECK(legendre_weighted_minus(l, lambda, x) == doctest::Approx(direct).epsilon(1e-13));
          CHECK(to_double(legendre_weighted_minus(l, lambda, exact_rational(x))) ==
                doctest::Approx(direct).epsilon(1e-13));
        }
    // Finite at the endpoints, where P_l^{-lambda} alone is not.
    CHECK(std::isfinite(legendre_weighted_minus(1, 3, -1.0)));
    CHECK(legendre_weighted_minus(2, 2, 1.0) == 0.0);
  }

  TEST_CASE("normalisation constant") {
    for (int l = 0; l <= 6; ++l)
      for (int m = -l; m <= l; ++m)
        CHECK(norm_constant(l, Rational(m)) ==
              doctest::Approx(std::tgamma(l + 1.0) / std::tgamma(l - m + 1.0)).epsilon(1e-15));
  }
}
