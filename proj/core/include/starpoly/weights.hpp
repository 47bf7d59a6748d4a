/**
 * @file weights.hpp
 * @brief Integral representations of the pair (u0, u1): positive weight
 *        functions U_0, U_1 on (0, b) and the induced weights on the
 *        threefold star, plus numeric moment quadrature.
 *
 * Canonical normalization (default gamma1): int_0^b x^{3n} U_0 dx = (u0)_{3n}
 * and int_0^b x^{3n+1} U_1 dx = (u1)_{3n+1}. The support is (0, inf) for
 * cases A, B1, B2 and (0, 1) for case C. A non-default gamma1 rescales the
 * weights as U_k(x) -> alpha^{k+1} U_k(alpha x) with
 * alpha = (gamma1_default / gamma1)^{1/3}.
 */
#ifndef STARPOLY_WEIGHTS_HPP
#define STARPOLY_WEIGHTS_HPP

#include <complex>
#include <optional>

#include "starpoly/family.hpp"

namespace starpoly {

/// Upper endpoint of the support of the (rescaled) weights; +infinity for
/// cases A, B1, B2.
double support_upper(const FamilyParams& params);

/**
 * @brief Weight U_k(x), k in {0, 1}, at x > 0 inside the support.
 *
 * Case A uses Airy functions, B1/B2 Tricomi U, case C a Gauss 2F1 in 1 - x^3.
 * @throws EvaluationDomainError outside the support.
 */
double weight(const FamilyParams& params, int k, double x);

/**
 * @brief Weight of the functional u_k on the star ray arg z = 2 pi j / 3:
 *        W_k(w^j t) = (1/3) w^{j (2k - 1)} U_k(t), w = e^{2 pi i/3}, t > 0.
 */
std::complex<double> star_weight(const FamilyParams& params, int k, int j, double t);

/**
 * @brief Numeric moment int_0^b x^{3n+k} U_k(x) dx by double-exponential
 *        quadrature (support truncated where the integrand underflows);
 *        matches the exact moments to ~1e-10 relative.
 */
double quadrature_moment(const FamilyParams& params, int k, long n);

/// Elementary closed forms available for special B1 parameters
/// (mu in {-1/2, 0, 1, 2}); nullopt when no such form exists.
std::optional<double> b1_particular_u0(const Rat& mu, double x);
std::optional<double> b1_particular_u1(const Rat& mu, double x);

/// Case C at (mu, rho) = (1, 3/2): algebraic (Chebyshev-like) weights.
double chebyshev_u0(double x);
double chebyshev_u1(double x);

/// Case C at (mu, rho) = (-1/2, 0): algebraic (Faber-like) weights.
double faber_u0(double x);
double faber_u1(double x);

}  // namespace starpoly

#endif  // STARPOLY_WEIGHTS_HPP
