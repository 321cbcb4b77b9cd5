#pragma once

#include <vector>

#include "tribessel/kinematics.hpp"
#include "tribessel/quadrature.hpp"

namespace tribessel {

struct BesselFactor {
  int order = 0;
  double k = 0.0;
};

enum class TailMethod {
  /// Each exponential component of the asymptotic Hankel expansion is
  /// integrated along a ray into the half plane where it decays.
  contour,
  /// Smooth cutoff windows at R0, 2 R0, 4 R0, ... followed by Richardson
  /// extrapolation in 1/R. Slower; kept as an independent second route.
  windowed,
};

struct OracleOptions {
  /// Truncation radius R0 in units of the longest period 2 pi / k_min.
  double radius_periods = 40.0;
  /// Panels on [0, R0] are at most this fraction of the shortest period 2 pi / sum(k).
  double panel_fraction = 0.25;
  TailMethod tail = TailMethod::contour;
  int richardson_levels = 4;
  long max_panels = 4'000'000;
  /// Panels are integrated concurrently; the reduction order is fixed either way.
  bool parallel = true;
};

/// int_0^inf r^power prod_i j_{order_i}(k_i r) dr
struct OscillatoryIntegralSpec {
  int power = 0;
  std::vector<BesselFactor> factors;
  double tol = 1e-10;
  OracleOptions options;
};

/// Absolute error target is tol * max(1, |value|); NonConvergence if it is
/// not met, ConvergenceDomain if the integral diverges at the origin or in the tail.
quad::Result<double> integrate_oscillatory(const OscillatoryIntegralSpec& spec);

/// The defining three-Bessel integral with weight r^(2-lambda) and third order lambda3 + lambda.
IntegralResult oracle_triple(const AngularIndices& ang, double k1, double k2, double k3, double tol = 1e-10,
                             const OracleOptions& options = {});

/// int_0^inf r^(2-L) j_{N+M-L}(k1 r) j_0(k2 r) j_N(k3 r) j_M(k4 r) dr
IntegralResult oracle_quadruple(int L, int N, int M, double k1, double k2, double k3, double k4,
                                double tol = 1e-10, const OracleOptions& options = {});

}  // namespace tribessel
