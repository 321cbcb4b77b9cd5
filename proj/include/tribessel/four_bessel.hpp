#pragma once

#include <vector>

#include "tribessel/exact.hpp"
#include "tribessel/kinematics.hpp"

namespace tribessel {

struct QuadKinematics {
  double k1 = 0, k2 = 0, k3 = 0, k4 = 0;
  /// Overlap of the two triangle supports in the intermediate momentum K.
  double k_lo = 0, k_hi = 0;

  bool quadrilateral() const { return k_lo < k_hi; }
  /// Throws InvalidArgument unless all momenta are positive and finite.
  static QuadKinematics make(double k1, double k2, double k3, double k4);
};

/// r^(2-L) j_{N+M-L} j_0 j_N j_M
struct KernelIndices {
  int L = 0, N = 0, M = 0;
};

/// int_{K_lo}^{K_hi} K^(-2(N+M)) (1-xi^2)^(L/2) P_calL^{-L}(xi) P_l(xi') dK, with
/// xi = (k1^2+k2^2-K^2)/(2 k1 k2) and xi' = (k3^2+k4^2-K^2)/(2 k3 k4).
/// Exactly 0 on an empty window. `n_plus_m` is N + M.
double s_integral(const QuadKinematics& kin, int L, int n_plus_m, int calL, int l, double rel_tol = 1e-13);

/// Row of the closure integrand above the first triangle: I(L; n, 0, n+L; k1, k2, K)
/// for K >= k1 + k2. The product j_n(k1 r) j_0(k2 r) is band-limited below K there, so
/// only the first L Taylor terms of it survive:
///   sum_{j<L} c_j pi (2n+2j+1)!! 2^(j-L) / ((L-j-1)! K^(3-L+n+2j)).
/// Zero for L = 0.
double upper_first_factor(int L, int n, double k1, double k2, double K);

/// (2/pi) int K^2 upper_first_factor(K) I(0; N, M, N+M; k3, k4, K) dK over
/// [max(k1+k2, |k3-k4|), k3+k4]. The S double sum leaves this piece out, and it is
/// nonzero whenever L >= 1 and k3 + k4 > k1 + k2.
double four_bessel_upper_correction(const KernelIndices& idx, const QuadKinematics& kin, double rel_tol = 1e-13);

/// The four-Bessel integral as the double sum of S integrals plus
/// four_bessel_upper_correction. When the S terms cancel by more than four digits
/// the closure quadrature below is returned instead.
///
/// DomainError when K_lo = 0 and N + M > L, where the individual S integrals diverge.
IntegralResult eval_four_bessel(const KernelIndices& idx, const QuadKinematics& kin, bool parallel = true);

/// (2/pi) int K^2 I(L; N+M-L, 0, N+M-L; k1, k2, K) I(0; N, M, N+M; k3, k4, K) dK
/// over the overlap window, both factors from the triple-integral closed form, plus
/// the same upper correction.
IntegralResult eval_four_bessel_closure(const KernelIndices& idx, const QuadKinematics& kin);

/// Coefficient of (1-xi^2)^(L/2) P_calL^{-L}(xi) in I(L; n, 0, n; k1, k2, K), divided by
/// pi beta/(4 k1 k2 K) (k1/K)^n (k1 k2/K)^L: (-k2/k1)^calL C(n, calL) in rational form,
/// read off the general coupling coefficients. Index calL, powers of k2/k1 excluded.
std::vector<Rational> first_factor_coefficients(int n);

}  // namespace tribessel
