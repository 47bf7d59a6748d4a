/**
 * @file rational.hpp
 * @brief Exact rational arithmetic carrier and the library error hierarchy.
 *
 * All coefficient formulas in the library are rational functions of the family
 * parameters, so every structural identity (orthogonality, recurrences, ODE
 * residuals) can be verified exactly. This header fixes the rational number
 * type (GMP's mpq_class), its canonical "p/q" string form, and the exception
 * types shared by all modules.
 */
#ifndef STARPOLY_RATIONAL_HPP
#define STARPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace starpoly {

/// Exact rational number, always stored in lowest terms with positive denominator.
using Rat = mpq_class;

/**
 * @brief Base class for all domain-related exceptions thrown by the library.
 */
class DomainError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * @brief Exception for parameter validation errors (invalid family parameters).
 */
class ParameterDomainError : public DomainError {
    using DomainError::DomainError;
};

/**
 * @brief Exception for evaluation input errors (argument outside the support).
 */
class EvaluationDomainError : public DomainError {
    using DomainError::DomainError;
};

/**
 * @brief Exception for iterative schemes that fail to reach their tolerance.
 */
class ConvergenceError : public DomainError {
    using DomainError::DomainError;
};

/**
 * @brief Parses an exact rational from a "p", "-p" or "p/q" string.
 *
 * The string is never routed through floating point; "3/2" is exactly 3/2.
 *
 * @throws ParameterDomainError on malformed input or zero denominator.
 */
inline Rat parse_rational(const std::string& text) {
    mpq_class value;
    if (value.set_str(text, 10) != 0) {
        throw ParameterDomainError("not a valid rational: '" + text + "'");
    }
    if (value.get_den() == 0) {
        throw ParameterDomainError("zero denominator in rational: '" + text + "'");
    }
    value.canonicalize();
    return value;
}

/// Canonical "p/q" string form (always includes the denominator, e.g. "2/1").
inline std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Conversion to double (rounds to nearest representable).
inline double rat_to_double(const Rat& r) { return r.get_d(); }

/// Shortest-faithful formatting of a double with 17 significant digits.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1) over exact rationals.
inline Rat pochhammer(const Rat& a, long n) {
    Rat prod = 1;
    Rat term = a;
    for (long k = 0; k < n; ++k) {
        prod *= term;
        term += 1;
    }
    return prod;
}

}  // namespace starpoly

#endif  // STARPOLY_RATIONAL_HPP
