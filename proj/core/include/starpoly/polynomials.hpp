/**
 * @file polynomials.hpp
 * @brief Exact generation of P_n and Q_n, cubic decomposition, component
 *        recurrences and terminating hypergeometric closed forms.
 *
 * Every P_n is threefold symmetric, P_n(w x) = w^n P_n(x) with w = e^{2 pi i/3},
 * so its coefficients live on a single residue class mod 3. SymmetricPolynomial
 * stores exactly that class: coeffs[i] is the coefficient of x^{residue + 3 i}.
 */
#ifndef STARPOLY_POLYNOMIALS_HPP
#define STARPOLY_POLYNOMIALS_HPP

#include <vector>

#include "starpoly/family.hpp"
#include "starpoly/rational.hpp"
#include "starpoly/recurrence.hpp"

namespace starpoly {

/**
 * @brief Monic polynomial supported on a single residue class mod 3.
 */
struct SymmetricPolynomial {
    int residue = 0;          ///< common residue mod 3 of all supported degrees
    std::vector<Rat> coeffs;  ///< coeffs[i] = coefficient of x^{residue + 3 i}; empty = zero

    /// Degree, or -1 for the zero polynomial.
    long degree() const {
        return coeffs.empty() ? -1 : residue + 3 * static_cast<long>(coeffs.size() - 1);
    }

    /// Coefficient of x^k (zero off the residue class).
    Rat coeff(long k) const {
        if (k < 0 || k % 3 != residue) return Rat(0);
        std::size_t i = static_cast<std::size_t>((k - residue) / 3);
        return i < coeffs.size() ? coeffs[i] : Rat(0);
    }

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const SymmetricPolynomial& other) const;

    /// Full dense coefficient vector c[0..degree] (size degree+1; empty for zero).
    std::vector<Rat> to_dense() const;

    /// Exact evaluation.
    Rat evaluate(const Rat& x) const;
};

/// Builds a SymmetricPolynomial from a dense coefficient vector.
/// @throws DomainError if the support spans more than one residue class.
SymmetricPolynomial from_dense(const std::vector<Rat>& dense);

/// x * P (shifts the residue class).
SymmetricPolynomial mul_x(const SymmetricPolynomial& p);

/// P - c * Q; both must live on the same residue class (or be zero).
SymmetricPolynomial sub_scaled(const SymmetricPolynomial& p, const Rat& c,
                               const SymmetricPolynomial& q);

/// Formal derivative P' (residue class shifts down by one).
SymmetricPolynomial derivative(const SymmetricPolynomial& p);

/**
 * @brief Generates P_0..P_N by the third-order recurrence
 *        P_{n+1} = x P_n - gamma_{n-1} P_{n-2} (n >= 2), P_0=1, P_1=x, P_2=x^2.
 */
std::vector<SymmetricPolynomial> generate(const FamilyParams& params, long N);

/**
 * @brief Monic derivative sequence Q_n = P'_{n+1}/(n+1) for n = 0..N-1.
 *
 * Verifies exactly that the Q_n satisfy the third-order recurrence with
 * coefficients gamma~_n from the recurrence module.
 *
 * @throws DomainError if the gamma~ recurrence fails (signals a coefficient bug).
 */
std::vector<SymmetricPolynomial> derivative_sequence(const std::vector<SymmetricPolynomial>& P,
                                                     const FamilyParams& params);

/**
 * @brief Structure relation P_{n+3} = Q_{n+3} + ((n+1) gamma_{n+2} - (n+3) gamma~_{n+1}) Q_n.
 * @return true iff the relation holds exactly.
 */
bool check_structure_relation(const std::vector<SymmetricPolynomial>& P,
                              const std::vector<SymmetricPolynomial>& Q,
                              const FamilyParams& params, long n);

/**
 * @brief Diagonal component of the cubic decomposition, a monic polynomial in
 *        the cubed variable y = x^3: P_{3n+j}(x) = x^j Pn_j(x^3).
 */
struct ComponentPolynomial {
    int j = 0;                ///< residue index in {0,1,2}
    long n = 0;               ///< component degree
    std::vector<Rat> coeffs;  ///< coeffs[i] = coefficient of y^i, size n+1, monic
};

/// Extracts the cubic-decomposition component of a symmetric polynomial.
ComponentPolynomial cubic_components(const SymmetricPolynomial& p);

/// One row of the component four-term recurrence
/// Pc_{n+1} = (y - beta_n) Pc_n - alpha_n Pc_{n-1} - gamma_{n-1}^{[j]} Pc_{n-2}.
struct ComponentRecurrenceRow {
    Rat beta;   ///< valid for n >= 0
    Rat alpha;  ///< valid for n >= 1 (0 when n = 0, where it multiplies Pc_{-1})
    Rat gamma;  ///< valid for n >= 1 (0 when n = 0)
};

/**
 * @brief Component recurrence coefficients from the gamma-products
 *        beta_n = g_{3n-1+j} + g_{3n+j} + g_{3n+1+j},
 *        alpha_n = g_{3n-2+j} g_{3n+j} + g_{3n-1+j} g_{3n-3+j} + g_{3n-2+j} g_{3n-1+j},
 *        gamma_n = g_{3n-2+j} g_{3n+j} g_{3n+2+j},
 *        where g = gamma of the parent family and g_m = 0 for m <= 0.
 */
ComponentRecurrenceRow component_recurrence(const FamilyParams& params, int j, long n);

/// Closed-form component coefficients where a printed table exists
/// (cases A, B1; case C except the odd-index gamma rows). Entries that have
/// no closed form are returned as std::nullopt.
struct ComponentRecurrenceClosed {
    std::optional<Rat> beta, alpha, gamma;
};
ComponentRecurrenceClosed component_recurrence_closed(const FamilyParams& params, int j, long n);

/**
 * @brief Regenerates the component polynomials Pc_0..Pc_N of residue class j
 *        via the four-term component recurrence (consistency device).
 */
std::vector<ComponentPolynomial> component_sequence(const FamilyParams& params, int j, long N);

/**
 * @brief Terminating generalized hypergeometric series as an exact polynomial
 *        in y: sum_{k=0}^{n} [prod (a_i)_k / prod (b_j)_k] (scale y)^k / k!.
 *
 * @param num Upper parameters; exactly one must be a nonpositive integer -n.
 * @param den Lower parameters; none may be an integer in [-n+1, 0].
 * @return Coefficient vector in y, ascending, size n+1.
 * @throws DomainError if the termination/pole preconditions fail.
 */
std::vector<Rat> pfq_terminating(const std::vector<Rat>& num, const std::vector<Rat>& den,
                                 const Rat& scale);

/**
 * @brief The printed terminating-hypergeometric closed form of P_degree:
 *        1F2 for case A, 2F2 for B1/B2, 3F2 for C, with the normalizing
 *        Pochhammer prefactor. The result is monic and equals the recurrence
 *        output exactly.
 *
 * @throws DomainError if a Pochhammer normalizer vanishes (degenerate params).
 */
SymmetricPolynomial hypergeometric_closed_form(const FamilyParams& params, long degree);

}  // namespace starpoly

#endif  // STARPOLY_POLYNOMIALS_HPP
