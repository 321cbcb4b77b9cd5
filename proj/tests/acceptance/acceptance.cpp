// One line per acceptance criterion; exit status is the number of failures.
#include <cstdio>
#include <exception>

#include "tribessel/verify.hpp"

namespace {

struct Criterion {
  int id;
  const char* suite;
  double seconds;
  const char* what;
};

constexpr Criterion kCriteria[] = {
    {1, "appendix-b", 5.0, "printed closed forms and A table, 10 interior momenta, rel 1e-11"},
    {2, "cross-method", 60.0, "master vs Gervois, lambda <= 2, orders <= 4, 25 momenta, rel 1e-10"},
    {3, "oracle", 600.0, "master vs quadrature, lambda <= 2, orders <= 3, rel 1e-6 / 2e-5"},
    {4, "gradshteyn", 1.0, "lambda = 1 above the triangle vs Gamma form, rel 1e-11"},
    {5, "sum-rule", 1.0, "sum rule for lambda <= 6, 100 triangles, rel 1e-11"},
    {6, "legendre-identities", 30.0, "generalized Legendre identity suite"},
    {7, "wigner", 5.0, "exact 3j/6j symmetries, orthogonality, binomial identity"},
    {8, "four-bessel", 600.0, "four-Bessel kernel vs quadrature, N+M <= 3, 10 quadrilaterals, rel 1e-4"},
};

}  // namespace

int main() {
  int failures = 0;
  for (const auto& c : kCriteria) {
    bool pass = false;
    char detail[256];
    try {
      const auto r = tribessel::run_suite(c.suite);
      pass = r.pass() && r.seconds < c.seconds;
      std::snprintf(detail, sizeof detail, "%zu/%zu cases, max deviation %.3g, %.2f s (limit %.0f s)",
                    r.cases.size() - r.failures, r.cases.size(), r.max_deviation, r.seconds, c.seconds);
      if (!pass)
        for (const auto& x : r.cases)
          if (!x.pass) std::printf("    failed: %s value %.17g reference %.17g\n", x.label.c_str(), x.value, x.reference);
    } catch (const std::exception& e) {
      std::snprintf(detail, sizeof detail, "error: %s", e.what());
    }
    std::printf("%s criterion %d [%s] %s: %s\n", pass ? "PASS" : "FAIL", c.id, c.suite, c.what, detail);
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  return failures;
}
