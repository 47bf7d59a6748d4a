/**
 * @file recurrence.hpp
 * @brief Exact recurrence coefficient sequences theta_n, gamma_n, gamma~_n.
 *
 * The monic sequences studied here satisfy the third-order recurrence
 *     P_{n+1}(x) = x P_n(x) - gamma_{n-1} P_{n-2}(x),   n >= 2,
 * with P_0 = 1, P_1 = x, P_2 = x^2, and their monic derivatives
 * Q_n = P'_{n+1}/(n+1) satisfy the same recurrence with coefficients
 * gamma~_n. The rational sequence theta_n links the two:
 *     gamma~_n = (n/(n+2)) theta_n gamma_{n+1},   n >= 1,
 * and solves the Riccati-type identity theta_{n+3} + 1/theta_{n+1} = 2.
 *
 * All functions are pure and O(1) per call (closed forms), hence trivially
 * safe for concurrent use.
 */
#ifndef STARPOLY_RECURRENCE_HPP
#define STARPOLY_RECURRENCE_HPP

#include "starpoly/family.hpp"
#include "starpoly/rational.hpp"

namespace starpoly {

/**
 * @brief theta_n for n >= 1.
 *
 * Odd index n = 2m-1: (m+mu+1)/(m+mu) when mu is present, else 1.
 * Even index n = 2m:  (m+rho+1)/(m+rho) when rho is present, else 1.
 *
 * @throws ParameterDomainError on invalid params or vanishing denominator.
 */
Rat theta(const FamilyParams& params, long n);

/**
 * @brief gamma_n for n >= 1, via the per-case closed forms, scaled to the
 *        requested gamma1 (gamma_n depends linearly on gamma1).
 */
Rat gamma(const FamilyParams& params, long n);

/**
 * @brief gamma~_n for n >= 1: exactly (n/(n+2)) theta_n gamma_{n+1}.
 */
Rat gamma_tilde(const FamilyParams& params, long n);

/**
 * @brief gamma_n recomputed through the generic three-term recursion
 *        gamma_{n+2} = ((n+3)/(n+1)) * ((n(theta_n - 1)+1) /
 *        ((n+4)(theta_{n+1}-1)+1)) * gamma_{n+1},
 *        seeded with gamma_1 = params.gamma1. Used as an exact cross-check
 *        of the closed forms.
 */
Rat gamma_generic(const FamilyParams& params, long n);

/**
 * @brief Verifies theta_{n+3} + 1/theta_{n+1} = 2 exactly for 0 <= n <= N.
 *
 * @throws ParameterDomainError if some theta_{n+1} vanishes.
 */
bool check_riccati(const FamilyParams& params, long N);

}  // namespace starpoly

#endif  // STARPOLY_RECURRENCE_HPP
