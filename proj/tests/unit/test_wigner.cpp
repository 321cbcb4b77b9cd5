#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "doctest.h"
#include "tribessel/error.hpp"
#include "tribessel/wigner.hpp"

using namespace tribessel;
using Wide = boost::multiprecision::cpp_bin_float_50;

namespace {

Wide wfact(int n) {
  Wide f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Racah's single sum written out directly in 50-digit floats, sharing nothing with the library.
Wide racah_3j(int j1, int j2, int j3, int m1, int m2, int m3) {
  if (m1 + m2 + m3 != 0) return 0;
  const Wide tri = wfact(j1 + j2 - j3) * wfact(j1 - j2 + j3) * wfact(-j1 + j2 + j3) / wfact(j1 + j2 + j3 + 1);
  const Wide pre = sqrt(tri * wfact(j1 + m1) * wfact(j1 - m1) * wfact(j2 + m2) * wfact(j2 - m2) * wfact(j3 + m3) *
                        wfact(j3 - m3));
  Wide sum = 0;
  for (int k = 0; k <= j1 + j2 + j3; ++k) {
    const int d[] = {k, j1 + j2 - j3 - k, j1 - m1 - k, j2 + m2 - k, j3 - j2 + m1 + k, j3 - j1 - m2 + k};
    bool ok = true;
    for (int v : d) ok = ok && v >= 0;
    if (!ok) continue;
    Wide den = 1;
    for (int v : d) den *= wfact(v);
    sum += (k % 2 ? -1 : 1) / den;
  }
  return ((j1 - j2 - m3) % 2 ? -1 : 1) * pre * sum;
}

double f(const RadicalRational& r) { return r.to_double(); }

}  // namespace

TEST_SUITE("wigner") {
  TEST_CASE("three_j examples") {
    CHECK(three_j({0, 0, 0, 0, 0, 0}).to_string() == "1");
    CHECK(three_j({1, 1, 0, 0, 0, 0}).to_string() == "-sqrt(1/3)");
    CHECK(three_j({1, 1, 1, 0, 0, 0}).is_zero());
    CHECK(three_j({2, 2, 5, 0, 0, 0}).is_zero());
    CHECK(three_j({1, 1, 0, 1, 0, 0}).is_zero());
  }

  TEST_CASE("three_j(2 2 2; 0 0 0) within one ulp of a 50-digit Racah sum") {
    const double ref = static_cast<double>(racah_3j(2, 2, 2, 0, 0, 0));
    const double v = f(three_j({2, 2, 2, 0, 0, 0}));
    CHECK(std::abs(v - ref) <= std::nextafter(std::abs(ref), 1.0) - std::abs(ref));
    CHECK(three_j({2, 2, 2, 0, 0, 0}).to_string() == "-sqrt(2/35)");
  }

  TEST_CASE("three_j agrees with the brute-force sum for all entries up to 4") {
    for (int j1 = 0; j1 <= 4; ++j1)
      for (int j2 = 0; j2 <= 4; ++j2)
        for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; ++j3)
          for (int m1 = -j1; m1 <= j1; ++m1)
            for (int m2 = -j2; m2 <= j2; ++m2) {
              const int m3 = -m1 - m2;
              if (std::abs(m3) > j3) continue;
              const double ref = static_cast<double>(racah_3j(j1, j2, j3, m1, m2, m3));
              CHECK(f(three_j({j1, j2, j3, m1, m2, m3})) == doctest::Approx(ref).epsilon(1e-15));
            }
  }

  TEST_CASE("three_j rejects bad arguments") {
    CHECK_THROWS_AS(three_j({-1, 1, 1, 0, 0, 0}), InvalidArgument);
    CHECK_THROWS_AS(three_j({1, 1, 1, 2, 0, 0}), InvalidArgument);
  }

  TEST_CASE("six_j examples") {
    CHECK(six_j({0, 0, 0, 0, 0, 0}).to_string() == "1");
    CHECK(six_j({1, 1, 1, 1, 1, 1}).to_string() == "1/6");
    // {a b c; 0 c b} = (-1)^(a+b+c) / sqrt((2b+1)(2c+1))
    CHECK(six_j({1, 1, 2, 0, 2, 1}).to_string() == "sqrt(1/15)");
    CHECK(six_j({1, 1, 5, 1, 1, 1}).is_zero());
    CHECK_FALSE(SixJQuery{1, 1, 5, 1, 1, 1}.triangles());
  }

  TEST_CASE("six_j symmetries are exact") {
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        for (int c = 0; c <= 4; ++c)
          for (int d = 0; d <= 3; ++d)
            for (int e = 0; e <= 3; ++e)
              for (int g = 0; g <= 3; ++g) {
                const auto v = six_j({a, b, c, d, e, g});
                CHECK(v == six_j({b, a, c, e, d, g}));
                CHECK(v == six_j({a, c, b, d, g, e}));
                CHECK(v == six_j({d, e, c, a, b, g}));
              }
  }

  TEST_CASE("binomial 3j identity examples") {
    CHECK(binomial_3j_identity_check(0, 0));
    CHECK(binomial_3j_identity_check(2, 1));
    CHECK(binomial_3j_identity_check(5, 3));
    for (int l = 0; l <= 10; ++l)
      for (int lp = 0; lp <= l; ++lp) CHECK(binomial_3j_identity_check(l, lp));
  }
}
