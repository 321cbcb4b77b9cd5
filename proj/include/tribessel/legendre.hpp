#pragma once

#include "tribessel/exact.hpp"
#include "tribessel/polynomial.hpp"

namespace tribessel {

/// P_l(x) by the three-term recurrence, for -1 <= x <= 1.
double legendre_p(int l, double x);
/// Exact, from the cached polynomial part.
Rational legendre_p(int l, const Rational& x);

/// Jacobi polynomial P_n^(a,b)(x) for rational parameters.
///
/// Three-term recurrence with exact rational coefficients; where a
/// recurrence denominator vanishes (n + a + b + 1 = 0 for some step) the
/// explicit binomial sum is used instead.
double jacobi_p(int n, const Rational& a, const Rational& b, double x);
long double jacobi_p(int n, const Rational& a, const Rational& b, long double x);

/// Explicit sum over generalized binomials, exact in (a, b, x).
RationalPolynomial jacobi_polynomial(int n, const Rational& a, const Rational& b);

/// b_{l,m} = l! / Gamma(|l - m| + 1).
double norm_constant(int l, const Rational& m);
long double norm_constant_ld(int l, const Rational& m);

/// Generalized associated Legendre function of integer degree l >= 0 and any
/// rational order m, through the Jacobi factorization
///
///   P_l^m(x) = l!/Gamma(|l-m|+1) ((1-x)/(1+x))^(-m/2) P_l^(-m,m)(x).
///
/// Coincides with the Condon-Shortley P_l^m for integer |m| <= l, and is computed
/// there by the classical upward recurrence instead. Defined on
/// the open interval; at x = +-1 the value is returned only when it is finite
/// (the prefactor does not diverge), otherwise DomainError.
double assoc_legendre_general(int l, const Rational& m, double x);
long double assoc_legendre_general(int l, const Rational& m, long double x);

/// Polynomial part in (x, m), poly_l = l! P_l^(-m,m)(x), so that
/// P_l^m(x) = poly_l(x, m) / Gamma(|l-m|+1) * ((1+x)/(1-x))^(m/2).
///
/// Built once per degree from poly_{l+1} = (2l+1) x poly_l - (l^2 - m^2) poly_{l-1}
/// and cached; safe to call concurrently.
const BivariatePolynomial& legendre_polynomial_part(int l);

/// Same value as assoc_legendre_general, through the cached symbolic polynomial.
double assoc_legendre_polynomial_form(int l, const Rational& m, double x);

/// (1 - x^2)^(lambda/2) P_l^(-lambda)(x) = (1-x)^lambda poly_l(x, -lambda) / (l+lambda)!.
///
/// The product is a polynomial, finite on the closed interval [-1, 1]; this is
/// the form the integral evaluators use at degenerate kinematics. The endpoint
/// factors (1-x)^lambda and, for lambda <= l, (1+x)^lambda are applied unexpanded.
double legendre_weighted_minus(int l, int lambda, double x);
Rational legendre_weighted_minus(int l, int lambda, const Rational& x);

/// P_{l+1}^m from P_l^m and P_{l-1}^m:
///   |l-m+1| P_{l+1}^m = (2l+1) x P_l^m - (l^2-m^2)/|l-m| P_{l-1}^m.
///
/// The relation holds for m <= l - 1 only; SingularRecurrence is raised
/// outside that range and when a denominator vanishes.
double assoc_legendre_recurrence_step(int l, const Rational& m, double x, double p_l, double p_lm1);

/// P_l^m(-x) == (-1)^l Gamma(|l+m|+1)/Gamma(|l-m|+1) P_l^{-m}(x), relative 1e-12.
bool parity_identity_check(int l, const Rational& m, double x);

/// d^{l+m}/dx^{l+m} (1-x^2)^l == (-1)^m l!/(l-m)! (1+x)^{-m} d^l/dx^l[(1-x^2)^l ((1+x)/(1-x))^m],
/// checked as an exact polynomial identity and at x.
bool derivative_identity_check(int l, int m, double x);

}  // namespace tribessel
