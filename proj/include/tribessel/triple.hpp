#pragma once

#include <memory>
#include <vector>

#include "tribessel/exact.hpp"
#include "tribessel/kinematics.hpp"

namespace tribessel {

/// One (calL, l) term of the coupling sum, with every angular factor folded in:
///   i^(l1+l2-l3) sqrt(2 l3 + 1) sqrt(C(2 l3, 2 calL)) (2l+1)
///   (l1 l3-calL l; 000) (l2 calL l; 000) {l1 l2 l3; calL l3-calL l} / (l1 l2 l3; 000)
struct CouplingTerm {
  int calL = 0;
  int l = 0;
  RadicalRational exact;
  double value = 0.0;
};

/// The kinematics-independent part of the closed form for (l1, l2, l3).
/// Requires the index triangle and even parity.
struct CouplingCoefficients {
  int l1 = 0, l2 = 0, l3 = 0;
  std::vector<CouplingTerm> terms;
};

/// Exact coefficients, cached per index triple; safe to call concurrently.
std::shared_ptr<const CouplingCoefficients> coupling_coefficients(int l1, int l2, int l3);

/// Closed-form sum over generalized associated Legendre functions P_l^{-lambda}(Delta).
///
/// Interior and degenerate (|Delta| = 1, beta = 1/2) triangles. Exterior
/// momenta give exact zero at lambda = 0 and OutsideDerivationDomain otherwise.
/// Odd parity raises ParityViolation; a failed index triangle raises DomainError.
IntegralResult eval_master(const AngularIndices& ang, const TriangleKinematics& kin);

/// lambda = 1 for arbitrary positive k1, k2, K, including K > k1 + k2 where
/// the extra term for l3 = l1 + l2 survives.
IntegralResult eval_lambda1_general(int l1, int l2, int l3, double k1, double k2, double K);

/// Gervois-Navelet triple sum in its triangle-restricted, cancellation-reduced
/// form, evaluated in exact rational arithmetic from the binary values of the
/// momenta. Needs beta > 0 and even l1 + l2 + l3; no index triangle required.
IntegralResult eval_gervois(const AngularIndices& ang, const TriangleKinematics& kin);

/// I(lambda; l', l', 0) = pi beta/(4 k1 k2 k3) (k1 k2/k3)^lambda (1-Delta^2)^(lambda/2) P_l'^{-lambda}(Delta).
IntegralResult eval_special_case(int lambda, int l_prime, const TriangleKinematics& kin);

struct SumRuleSides {
  double lhs = 0.0, rhs = 0.0;
};
SumRuleSides sum_rule_sides(int lambda, double k1, double k2, double k3);

/// beta(eta) sum_calL C(lambda, calL) (-k2/k1)^calL P_calL(eta) == beta(eta') (k3/k1)^lambda P_lambda(eta'),
/// relative 1e-11.
bool sum_rule_check(int lambda, double k1, double k2, double k3);

/// Picks an analytic route: lambda1_general for lambda = 1, master otherwise.
IntegralResult evaluate_analytic(const AngularIndices& ang, const TriangleKinematics& kin);

}  // namespace tribessel
