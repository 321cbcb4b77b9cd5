#include "tribessel/kinematics.hpp"

#include <cmath>
#include <cstdlib>

#include "tribessel/error.hpp"

namespace tribessel {

bool AngularIndices::triangle() const { return l3 >= std::abs(l1 - l2) && l3 <= l1 + l2; }

KinematicClass classify(double x) {
  const double gap = std::abs(x) - 1.0;
  if (std::abs(gap) <= kBoundaryTolerance) return KinematicClass::boundary;
  return gap < 0 ? KinematicClass::interior : KinematicClass::exterior;
}

double beta_of(double x) {
  switch (classify(x)) {
    case KinematicClass::interior: return 1.0;
    case KinematicClass::boundary: return 0.5;
    case KinematicClass::exterior: return 0.0;
  }
  return 0.0;
}

TriangleKinematics TriangleKinematics::make(double k1, double k2, double k3) {
  if (!(k1 > 0 && k2 > 0 && k3 > 0) || !std::isfinite(k1) || !std::isfinite(k2) || !std::isfinite(k3))
    throw InvalidArgument("momenta must be positive and finite");
  TriangleKinematics t;
  t.k1 = k1;
  t.k2 = k2;
  t.k3 = k3;
  t.delta = (k1 * k1 + k2 * k2 - k3 * k3) / (2.0 * k1 * k2);
  t.kinematic_class = classify(t.delta);
  t.beta = beta_of(t.delta);
  t.c1 = -k1 + k2 + k3;
  t.c2 = k1 - k2 + k3;
  t.c3 = k1 + k2 - k3;
  return t;
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::master: return "master";
    case Method::lambda1_general: return "lambda1";
    case Method::gervois: return "gervois";
    case Method::special_case: return "special_case";
    case Method::oracle: return "oracle";
  }
  return "?";
}

std::string_view to_string(KinematicClass c) {
  switch (c) {
    case KinematicClass::interior: return "interior";
    case KinematicClass::boundary: return "boundary";
    case KinematicClass::exterior: return "exterior";
  }
  return "?";
}

}  // namespace tribessel
