#pragma once

namespace tribessel {

/// Spherical Bessel function of the first kind j_n(x), n >= 0, x >= 0.
///
/// Power series below x = 1, Miller's downward recurrence for 1 <= x < n,
/// upward recurrence from the trigonometric j_0, j_1 for x >= max(n, 1).
double sph_bessel_j(int n, double x);

/// int_0^K k^(l+2) j_l(k r) dk == K^(l+2) j_{l+1}(K r) / r by adaptive quadrature,
/// relative 1e-9.
bool half_integral_check(int lambda3, double K, double r);

}  // namespace tribessel
