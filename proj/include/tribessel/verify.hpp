#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tribessel/oracle.hpp"
#include "tribessel/sweep.hpp"

namespace tribessel {

struct CaseResult {
  std::string label;
  double value = 0.0;
  double reference = 0.0;
  /// Relative deviation unless the suite says otherwise; exact checks use 0 or 1.
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

struct SuiteReport {
  std::string name;
  std::vector<CaseResult> cases;
  std::size_t failures = 0;
  double max_deviation = 0.0;
  double seconds = 0.0;
  bool pass() const { return failures == 0 && !cases.empty(); }
};

struct VerifyOptions {
  /// Fewer momenta per index tuple.
  bool quick = false;
  std::uint64_t seed = 20061;
  double oracle_tol = 1e-10;
  OracleOptions oracle;
  Execution execution = Execution::parallel;
};

/// appendix-b, cross-method, oracle, legendre-identities, sum-rule, gradshteyn, wigner, four-bessel.
std::span<const std::string_view> suite_names();

/// Throws InvalidArgument for an unknown suite id.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options = {});

/// 2^(l3-l1-l2-2) pi^(3/2) k1^l1 k2^l2 / K^(l3+2) Gamma(l3+3/2) / (Gamma(l2+3/2) Gamma(l1+3/2))
double gradshteyn_value(int l1, int l2, int l3, double k1, double k2, double K);

/// Condon-Shortley P_l^m from the Rodrigues derivative of (x^2-1)^l, |m| <= l.
double rodrigues_legendre(int l, int m, double x);

}  // namespace tribessel
