#pragma once

#include <span>
#include <vector>

#include "tribessel/exact.hpp"
#include "tribessel/kinematics.hpp"

namespace tribessel {

/// coefficient * k1^p1 k2^p2 Delta^pd
struct TableMonomial {
  Rational coefficient;
  int p1 = 0, p2 = 0, pd = 0;
};

/// I = pi beta / (2^(lambda+2) (l1+l2+l3+lambda)!) k1^(-l1-1) k2^(-l2-1) k3^(-l3-lambda-1) A(k1, k2, Delta)
struct TableEntry {
  AngularIndices indices;
  /// 1 / (2^(lambda+2) (l1+l2+l3+lambda)!)
  Rational scale;
  int e1 = 0, e2 = 0, e3 = 0;  // exponents of k1, k2, k3
  std::vector<TableMonomial> a;

  /// A(k1, k2, Delta), evaluated exactly from the binary values.
  Rational a_value(const Rational& k1, const Rational& k2, const Rational& delta) const;
  /// The full integral value at triangle kinematics.
  double value(const TriangleKinematics& kin) const;
};

/// The nine printed A polynomials for lambda <= 2 and lambda_i <= 1.
/// Throws NotInTable elsewhere.
const TableEntry& explicit_table(const AngularIndices& ang);
std::span<const AngularIndices> explicit_table_indices();

/// The six printed closed forms in the momenta and c1, c2, c3, evaluated in
/// exact arithmetic and rounded once. Throws NotInTable for other indices.
double printed_explicit_value(const AngularIndices& ang, const TriangleKinematics& kin);
std::span<const AngularIndices> printed_explicit_indices();

}  // namespace tribessel
