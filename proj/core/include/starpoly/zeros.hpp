/**
 * @file zeros.hpp
 * @brief Zeros of P_n on the threefold star, interlacing, and the
 *        largest-zero bound via a scaled Hessenberg operator norm.
 *
 * Writing n = 3m + j, the zeros of P_n are the origin with multiplicity j
 * together with the m cube roots (times the cube roots of unity) of the m
 * simple positive roots of the component polynomial P_m^{[j]} in y = x^3.
 * All nonzero zeros therefore lie on the star {r w^k : r > 0, k = 0, 1, 2},
 * w = e^{2 pi i / 3}.
 */
#ifndef STARPOLY_ZEROS_HPP
#define STARPOLY_ZEROS_HPP

#include <complex>
#include <vector>

#include "starpoly/polynomials.hpp"

namespace starpoly {

/**
 * @brief The n x n Hessenberg matrix H_n whose characteristic polynomial is
 *        P_n: ones on the superdiagonal, gamma_{k-2} at (k, k-2), k = 3..n
 *        (1-based indices).
 */
struct HessenbergMatrix {
    long n = 0;
    std::vector<Rat> gammas;  ///< gammas[i] = gamma_{i+1}, i = 0..n-3
};

HessenbergMatrix hessenberg(const FamilyParams& params, long n);

/**
 * @brief Row-sum operator norm of S^{-1} H_n S for the diagonal similarity
 *        d_k = d^k (k!)^{alpha/3}, evaluated in log space; every zero of P_n
 *        is bounded in modulus by this value.
 */
double norm_bound(const FamilyParams& params, long n, double d, double alpha);

/**
 * @brief Closed-form largest-zero bound (3 / 2^{2/3}) c^{1/3} n^{alpha/3},
 *        with (c, alpha) = (4, 2), (4/9, 1), (4/9, 1), (4/27, 0) for cases
 *        A, B1, B2, C at the default gamma1; c scales linearly with gamma1.
 */
double largest_zero_bound(const FamilyParams& params, long degree);

/// Growth constants (c, alpha) with gamma_n ~ c (n/3)^alpha ... exposed so
/// callers can reconstruct the similarity parameters; c includes the gamma1
/// scaling factor.
struct GrowthConstants {
    double c = 0;
    double alpha = 0;
};
GrowthConstants growth_constants(const FamilyParams& params);

/**
 * @brief Zeros of P_degree as a star-shaped set.
 */
struct ZeroSet {
    long degree = 0;
    int origin_multiplicity = 0;             ///< j = degree mod 3
    std::vector<double> positive_roots;      ///< the m simple positive zeros, ascending
    std::vector<std::complex<double>> star_points;  ///< all nonzero zeros r w^k
};

/**
 * @brief Computes the positive zeros of P_degree by bracketing the component
 *        polynomial in y = x^3 on a Chebyshev-clustered grid, followed by
 *        bisection and Newton polishing (relative accuracy ~1e-13).
 *
 * @throws ConvergenceError if the expected number of sign changes cannot be
 *         isolated.
 */
ZeroSet positive_zeros(const FamilyParams& params, long degree);

/**
 * @brief Verifies the interlacing chain of the positive zeros of
 *        P_{3n}, P_{3n+1}, P_{3n+2}:
 *        x_1^{(0)} < x_1^{(1)} < x_1^{(2)} < x_2^{(0)} < ...
 *        with strictness margin tol relative to the local magnitude.
 */
bool check_interlacing(const FamilyParams& params, long n, double tol);

}  // namespace starpoly

#endif  // STARPOLY_ZEROS_HPP
