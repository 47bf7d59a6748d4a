/**
 * @file moments.hpp
 * @brief Exact moments of the pair of dual functionals (u0, u1) and the
 *        2-orthogonality verification machinery.
 *
 * Threefold symmetry forces the support of the moment sequences onto single
 * residue classes: (u0)_m vanishes unless m = 3n and (u1)_m vanishes unless
 * m = 3n + 1, with the normalization (u0)_0 = 1, (u1)_1 = 1.
 *
 * 2-orthogonality of {P_n} with respect to (u0, u1) means
 *     <u0, x^m P_n> = 0 for n >= 2m + 1, nonzero at n = 2m,
 *     <u1, x^m P_n> = 0 for n >= 2m + 2, nonzero at n = 2m + 1.
 */
#ifndef STARPOLY_MOMENTS_HPP
#define STARPOLY_MOMENTS_HPP

#include <vector>

#include "starpoly/polynomials.hpp"

namespace starpoly {

/**
 * @brief Table of the nonzero moments of the pair (u0, u1).
 */
struct MomentTable {
    std::vector<Rat> u0;  ///< u0[n] = (u0)_{3n}
    std::vector<Rat> u1;  ///< u1[n] = (u1)_{3n+1}

    /// Full moment (u0)_m for arbitrary m (zero off the residue class).
    Rat moment_u0(long m) const;
    /// Full moment (u1)_m for arbitrary m (zero off the residue class).
    Rat moment_u1(long m) const;
};

/**
 * @brief Builds count entries of each moment sequence via the first-order
 *        recursions in (theta_1, theta_2, gamma_1):
 *
 *  (2/g1) [ (3n+2)((3n+1)(t1-1)(t2-1) + (t1+t2-2)) - (t1-2) ] (u0)_{3n+3}
 *      = (3n+2)(3n+1) t1 (2 t2 - 1) (u0)_{3n},
 *
 *  (u1)_{3n+1} = 2(t1-1)((3n+2) t2 - (3n+1)) / (g1 (t1-2)(2 t2 - 1)) (u0)_{3n+3}
 *                - (3n+1) t1 / (t1-2) (u0)_{3n},       (t1 != 2)
 *  (u1)_{3n+1} = 2(3n+1)/(3n+2) (u0)_{3n},             (t1 == 2).
 *
 * @throws ParameterDomainError if a recursion coefficient degenerates.
 */
MomentTable moments(const FamilyParams& params, long count);

/// Closed-form (u0)_{3n} (per-case product of Pochhammer ratios, scaled by
/// (gamma1/gamma1_default)^n). Exact cross-check of the recursion.
Rat closed_moment_u0(const FamilyParams& params, long n);

/// Closed-form (u1)_{3n+1}, same normalization conventions.
Rat closed_moment_u1(const FamilyParams& params, long n);

/// Exact action <u_k, x^m P> computed from the moment table.
/// @throws DomainError if the table is too short for deg(P) + m.
Rat pair_functional(const MomentTable& table, int k, long m, const SymmetricPolynomial& p);

/**
 * @brief Verifies the full 2-orthogonality conditions for P_0..P_N.
 *
 * Checks, for every n <= N and every admissible m, the vanishing pattern and
 * the non-vanishing of the diagonal entries <u0, x^m P_{2m}> and
 * <u1, x^m P_{2m+1}>.
 *
 * @return true iff all conditions hold exactly.
 */
bool verify_orthogonality(const FamilyParams& params, const std::vector<SymmetricPolynomial>& P,
                          long N);

/**
 * @brief Diagonal product identities
 *        <u0, x^{n+1} P_{2n+2}> = prod_{k=0}^{n} gamma_{2k+1},
 *        <u1, x^{n+1} P_{2n+3}> = prod_{k=0}^{n} gamma_{2k+2}.
 * @return true iff both hold exactly for 0 <= n <= N.
 */
bool check_product_identities(const FamilyParams& params,
                              const std::vector<SymmetricPolynomial>& P, long N);

}  // namespace starpoly

#endif  // STARPOLY_MOMENTS_HPP
