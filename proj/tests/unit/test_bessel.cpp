#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "doctest.h"
#include "tribessel/bessel.hpp"
#include "tribessel/error.hpp"

using namespace tribessel;
using Wide = boost::multiprecision::cpp_bin_float_50;

namespace {

// Miller: recur downward from far above n, normalise with j_0 = sin x / x.
double miller(int n, double xd) {
  const Wide x = xd;
  const int start = n + 60 + static_cast<int>(xd);
  Wide up = 0, cur = Wide(1e-30), jn = 0;
  for (int k = start; k >= 1; --k) {
    const Wide down = (2 * k + 1) / x * cur - up;
    up = cur;
    cur = down;
    if (k - 1 == n) jn = cur;
  }
  return static_cast<double>(jn * (sin(x) / x) / cur);
}

}  // namespace

TEST_SUITE("bessel") {
  TEST_CASE("small arguments") {
    CHECK(sph_bessel_j(0, 0.0) == 1.0);
    CHECK(sph_bessel_j(1, 0.0) == 0.0);
    CHECK(sph_bessel_j(0, 1e-9) == doctest::Approx(1.0).epsilon(1e-16));
    CHECK(sph_bessel_j(2, 1e-3) == doctest::Approx(1e-6 / 15).epsilon(1e-10));
  }

  TEST_CASE("j_5(10) against a 50-digit downward recurrence") {
    CHECK(sph_bessel_j(5, 10.0) == doctest::Approx(miller(5, 10.0)).epsilon(1e-14));
  }

  TEST_CASE("agreement with std::sph_bessel and the Miller oracle") {
    for (int n = 0; n <= 20; ++n)
      for (double x : {0.05, 0.7, 1.0, 3.3, 9.0, 17.5, 60.0, 250.0}) {
        const double ref = miller(n, x);
        const double v = sph_bessel_j(n, x);
        if (x >= 1)
          CHECK(v == doctest::Approx(ref).epsilon(1e-13));
        else
          CHECK(std::abs(v - ref) <= 1e-15 + 1e-13 * std::abs(ref));
        CHECK(v == doctest::Approx(std::sph_bessel(n, x)).epsilon(1e-10).scale(1e-300));
      }
  }

  TEST_CASE("three-term recurrence") {
    for (int n = 1; n <= 20; ++n)
      for (double x : {0.1, 1.0, 10.0, 100.0}) {
        const double lhs = sph_bessel_j(n - 1, x) + sph_bessel_j(n + 1, x);
        const double rhs = (2 * n + 1) / x * sph_bessel_j(n, x);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
      }
  }

  TEST_CASE("bounds") {
    for (int n = 0; n <= 10; ++n)
      for (double x = 0; x < 200; x += 0.37) {
        CHECK(std::abs(sph_bessel_j(n, x)) <= 1.0);
        if (x > 10 * n) CHECK(std::abs(x * sph_bessel_j(n, x)) <= 1.1);
      }
    CHECK_THROWS_AS(sph_bessel_j(-1, 1.0), InvalidArgument);
    CHECK_THROWS_AS(sph_bessel_j(1, -1.0), InvalidArgument);
  }

  TEST_CASE("half-integral identity") {
    CHECK(half_integral_check(0, 1.0, 1.0));
    CHECK(half_integral_check(2, 3.0, 0.5));
    CHECK(half_integral_check(0, 1e-6, 1.0));
    CHECK(half_integral_check(4, 2.5, 1.7));
  }
}
