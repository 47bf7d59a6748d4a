/**
 * @file specfun.hpp
 * @brief Real special functions needed by the weight-function layer: Airy Ai,
 *        modified Bessel K, Kummer U (Tricomi), Gauss 2F1 and the upper
 *        incomplete gamma function.
 *
 * Accuracy target is ~1e-12 relative on the parameter/argument ranges used by
 * the weight functions (validated against arbitrary-precision fixtures).
 */
#ifndef STARPOLY_SPECFUN_HPP
#define STARPOLY_SPECFUN_HPP

#include "starpoly/rational.hpp"

namespace starpoly {

/// Airy function Ai(x) for x >= 0 (Maclaurin series for x <= 1, Bessel-K
/// representation beyond).
double airy_ai(double x);

/// Derivative Ai'(x) for x >= 0.
double airy_ai_prime(double x);

/// Modified Bessel function of the second kind K_nu(z), z > 0, via the
/// integral representation int_0^inf exp(-z cosh t) cosh(nu t) dt.
double bessel_k(double nu, double z);

/// Tricomi confluent hypergeometric U(a, b, x) for x > 0 and a > b - 1
/// (covers a > 0 directly and a <= 0 through the Kummer transformation
/// U(a,b,x) = x^{1-b} U(a-b+1, 2-b, x)).
double kummer_u(double a, double b, double x);

/// Gauss hypergeometric 2F1(a, b; c; z) for z < 1 (series for z <= 0.7,
/// linear connection at 1-z beyond; c - a - b must not be an integer there).
double gauss_2f1(double a, double b, double c, double z);

/// Upper incomplete gamma Gamma(alpha, z), z >= 0, alpha > 0 or non-integer.
double upper_incomplete_gamma(double alpha, double z);

}  // namespace starpoly

#endif  // STARPOLY_SPECFUN_HPP
