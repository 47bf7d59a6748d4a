/**
 * @file family.hpp
 * @brief The four families of threefold-symmetric 2-orthogonal sequences and
 *        their parameter domains.
 *
 * The families are labeled A, B1, B2 and C:
 *   - A:  no shape parameter (Appell case),
 *   - B1: one parameter mu > -1,
 *   - B2: one parameter rho > 0,
 *   - C:  two parameters mu > -1 and rho >= 0.
 * Each family carries a positive scale gamma1 (the first recurrence
 * coefficient); the canonical normalizations are the defaults below and a
 * non-default gamma1 acts by the dilation equivalence B_n(x) = a^{-n} P_n(a x).
 */
#ifndef STARPOLY_FAMILY_HPP
#define STARPOLY_FAMILY_HPP

#include <optional>
#include <string>
#include <vector>

#include "starpoly/rational.hpp"

namespace starpoly {

/// Family label.
enum class Case { A, B1, B2, C };

/// Parses "A" | "B1" | "B2" | "C".
Case case_from_string(const std::string& s);

/// Inverse of case_from_string.
std::string case_to_string(Case c);

/**
 * @brief Family selection plus exact rational parameters.
 *
 * Invariants (enforced by validate_params):
 *   - mu present exactly for cases B1 and C, with mu > -1;
 *   - rho present exactly for cases B2 (rho > 0) and C (rho >= 0);
 *   - gamma1 > 0.
 */
struct FamilyParams {
    Case family = Case::A;
    std::optional<Rat> mu;   ///< present for B1 and C
    std::optional<Rat> rho;  ///< present for B2 and C
    Rat gamma1 = 2;          ///< scale; defaults to the canonical normalization
};

/// Canonical gamma1 for the family: A: 2; B1: 2/(3(mu+2)); B2: 2/(3(rho+3)); C: 2/((mu+2)(rho+3)).
Rat default_gamma1(Case family, const std::optional<Rat>& mu, const std::optional<Rat>& rho);

/**
 * @brief Builds a FamilyParams value, filling in the default gamma1 when absent.
 *
 * Does not validate; call validate_params (or require_valid) afterwards.
 */
FamilyParams make_params(Case family,
                         std::optional<Rat> mu = std::nullopt,
                         std::optional<Rat> rho = std::nullopt,
                         std::optional<Rat> gamma1 = std::nullopt);

/**
 * @brief Result of parameter validation; lists every violated constraint.
 */
struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/**
 * @brief Validates a FamilyParams value.
 *
 * Accepts iff gamma1 > 0, the required parameters are present (and the
 * spurious ones absent), the positivity ranges hold (mu > -1 for B1/C,
 * rho > 0 for B2, rho >= 0 for C), and the derived theta_1, theta_2 avoid the
 * degenerate set {(n-1)/n : n >= 1}.
 */
ValidationReport validate_params(const FamilyParams& params);

/// Throws ParameterDomainError with the full report if validation fails.
void require_valid(const FamilyParams& params);

}  // namespace starpoly

#endif  // STARPOLY_FAMILY_HPP
