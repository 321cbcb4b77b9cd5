#pragma once

#include <string>
#include <string_view>

namespace tribessel {

/// (lambda; lambda1, lambda2, lambda3) of the weighted three-Bessel integral
///   int_0^inf r^(2-lambda) j_l1(k1 r) j_l2(k2 r) j_{l3+lambda}(k3 r) dr.
struct AngularIndices {
  int lambda = 0;
  int l1 = 0, l2 = 0, l3 = 0;

  bool triangle() const;
  bool even_parity() const { return (l1 + l2 + l3) % 2 == 0; }
  /// The closed-form sum needs both.
  bool master_evaluable() const { return triangle() && even_parity(); }
  bool non_negative() const { return lambda >= 0 && l1 >= 0 && l2 >= 0 && l3 >= 0; }
};

enum class KinematicClass { interior, boundary, exterior };

/// |Delta| - 1 within this counts as a degenerate triangle (beta = 1/2).
inline constexpr double kBoundaryTolerance = 1e-12;

/// Heaviside product theta(1-x) theta(1+x) in the half-maximum convention.
double beta_of(double x);
KinematicClass classify(double x);

struct TriangleKinematics {
  double k1 = 0, k2 = 0, k3 = 0;
  double delta = 0;  // (k1^2 + k2^2 - k3^2) / (2 k1 k2)
  double beta = 0;
  double c1 = 0, c2 = 0, c3 = 0;  // -k1+k2+k3, k1-k2+k3, k1+k2-k3
  KinematicClass kinematic_class = KinematicClass::exterior;

  /// Throws InvalidArgument unless all momenta are positive and finite.
  static TriangleKinematics make(double k1, double k2, double k3);
};

enum class Method { master, lambda1_general, gervois, special_case, oracle };

struct IntegralResult {
  double value = 0.0;
  Method method = Method::master;
  KinematicClass kinematic_class = KinematicClass::interior;
  double error_estimate = 0.0;
  /// Identifier of the closed form or numerical route that produced value.
  std::string formula;
  /// Odd-parity index sets the closed forms do not cover.
  bool outside_closed_form_scope = false;
};

std::string_view to_string(Method m);
std::string_view to_string(KinematicClass c);

namespace formula {
inline constexpr std::string_view master = "generalized-three-bessel-sum";
inline constexpr std::string_view lambda1 = "lambda1-all-kinematics";
inline constexpr std::string_view gervois = "gervois-navelet-reduced-sum";
inline constexpr std::string_view special_case = "equal-order-legendre-reduction";
inline constexpr std::string_view triangle_support = "triangle-support-zero";
inline constexpr std::string_view oracle = "direct-oscillatory-quadrature";
inline constexpr std::string_view four_bessel = "four-bessel-closure-expansion";
inline constexpr std::string_view four_oracle = "direct-oscillatory-quadrature-4";
}  // namespace formula

}  // namespace tribessel
