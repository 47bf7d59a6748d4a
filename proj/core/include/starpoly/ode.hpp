/**
 * @file ode.hpp
 * @brief Exact coefficients and residuals of the third-order differential
 *        equation satisfied by each P_n (and the companion equation for Q_n).
 *
 * For n >= 1 the polynomials satisfy
 *     (a_n x^3 - b_n) P_n''' + c_n x^2 P_n'' + d_n x P_n' = e_n P_n
 * with rational coefficients built from theta_{n-1}, theta_n, theta_{n+1}
 * and gamma_n. The monic derivatives Q_n satisfy the same form with
 * coefficients (a, b, c + 3a, d + 2c, e - d).
 */
#ifndef STARPOLY_ODE_HPP
#define STARPOLY_ODE_HPP

#include "starpoly/polynomials.hpp"

namespace starpoly {

/// Rational coefficient tuple of (a x^3 - b) y''' + c x^2 y'' + d x y' = e y.
struct OdeCoefficients {
    Rat a, b, c, d, e;
};

/**
 * @brief Coefficients of the equation satisfied by P_n, n >= 1:
 *        a = (theta_n - 1)(theta_{n+1} - 1),
 *        b = gamma_n ((n-1) theta_{n-1} - n + 2)(n theta_n - n + 1)
 *            ((n+1) theta_{n+1} - n) / (n (n+1)),   (first factor = 1 at n = 1)
 *        c = theta_n theta_{n+1} - 1 - (n-3)(theta_n - 1)(theta_{n+1} - 1),
 *        d = n theta_{n+1} - (n-1) theta_n (2 theta_{n+1} - 1),
 *        e = n theta_{n+1}.
 */
OdeCoefficients ode_coefficients(const FamilyParams& params, long n);

/// Coefficients of the companion equation satisfied by Q_n, obtained by
/// differentiating the equation of P_{n+1}: (a, b, c + 3a, d + 2c, e - d)
/// evaluated at index n + 1.
OdeCoefficients q_ode_coefficients(const FamilyParams& params, long n);

/// Exact residual (a x^3 - b) p''' + c x^2 p'' + d x p' - e p.
SymmetricPolynomial ode_residual(const OdeCoefficients& coeffs, const SymmetricPolynomial& p);

/// True iff the residual of P_n under its equation vanishes identically
/// (n = 0 is vacuously true).
bool check_ode(const FamilyParams& params, const SymmetricPolynomial& p, long n);

/// Same for Q_n under the companion equation.
bool check_q_ode(const FamilyParams& params, const SymmetricPolynomial& q, long n);

}  // namespace starpoly

#endif  // STARPOLY_ODE_HPP
