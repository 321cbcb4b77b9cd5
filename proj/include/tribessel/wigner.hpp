#pragma once

#include "tribessel/exact.hpp"

namespace tribessel {

/// Integer angular momenta only; half-integer spins are out of scope.
struct ThreeJQuery {
  int j1 = 0, j2 = 0, j3 = 0;
  int m1 = 0, m2 = 0, m3 = 0;

  bool triangle() const;
  /// m-sum, triangle and |m_i| <= j_i; the value can be non-zero only if true.
  bool selection_rules() const;
};

/// {a b c; d e f}
struct SixJQuery {
  int a = 0, b = 0, c = 0;
  int d = 0, e = 0, f = 0;

  /// Triads (abc), (aef), (dbf), (dec).
  bool triangles() const;
};

bool triangle(int a, int b, int c);

/// Racah sum in exact arithmetic.
///
/// Throws InvalidArgument for negative j or |m_i| > j_i. Selection-rule
/// failures return exact zero.
RadicalRational three_j(const ThreeJQuery& q, const FactorialTable& table = default_factorials());

/// (j1 j2 j3; 0 0 0)
RadicalRational three_j0(int j1, int j2, int j3, const FactorialTable& table = default_factorials());

RadicalRational six_j(const SixJQuery& q, const FactorialTable& table = default_factorials());

/// sqrt(C(2l,2l')) (l, l-l', l'; 0 0 0) == (-1)^l C(l,l') / sqrt(2l+1), compared exactly.
bool binomial_3j_identity_check(int l, int l_prime);

}  // namespace tribessel
