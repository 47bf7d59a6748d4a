#include "starpoly/weights.hpp"

#include <cmath>
#include <limits>

#include "starpoly/quadrature.hpp"
#include "starpoly/specfun.hpp"

namespace starpoly {

namespace {

/// Gamma(1/3) Gamma(2/3) = 2 pi / sqrt(3) (reflection formula).
const double kG13G23 = 2.0 * M_PI / std::sqrt(3.0);

double g3(double num) { return std::tgamma(num / 3.0); }

/// 1/Gamma(x), zero at the poles.
double rgamma(double x) {
    if (x <= 0 && x == std::floor(x)) return 0.0;
    return 1.0 / std::tgamma(x);
}

/// (gamma1_default / gamma1)^{1/3}, the argument-rescaling factor.
double alpha_scale(const FamilyParams& p) {
    return std::cbrt(rat_to_double(default_gamma1(p.family, p.mu, p.rho) / p.gamma1));
}

/**
 * Canonical (default-gamma1) weight U_k at x > 0. For case C, dist1 = 1 - x
 * must be supplied (cancellation-free when available) so that 1 - x^3 stays
 * accurate near the endpoint.
 */
double canonical_weight(const FamilyParams& p, int k, double x, double dist1) {
    if (k != 0 && k != 1) throw EvaluationDomainError("weight index k must be 0 or 1");
    if (x <= 0) throw EvaluationDomainError("weight requires x > 0");
    const double x3 = x * x * x;
    switch (p.family) {
        case Case::A:
            return k == 0 ? 3.0 * airy_ai(x) : -3.0 * airy_ai_prime(x);
        case Case::B1: {
            double mu = rat_to_double(*p.mu);
            if (k == 0)
                return 3.0 * g3(mu + 2) / kG13G23 * std::exp(-x3) * kummer_u(mu / 3, 2.0 / 3, x3);
            return 9.0 * g3(mu + 5) / kG13G23 * x * x * std::exp(-x3) *
                   kummer_u(mu / 3 + 1, 5.0 / 3, x3);
        }
        case Case::B2: {
            // U_0 is the B1 form at parameter rho + 1; U_1 is the B1 form at
            // parameter rho - 2 (the only choice whose moments reproduce the
            // dual functional u1, e.g. <u1, P_4> = 0).
            double rho = rat_to_double(*p.rho);
            if (k == 0)
                return 3.0 * g3(rho + 3) / kG13G23 * std::exp(-x3) *
                       kummer_u((rho + 1) / 3, 2.0 / 3, x3);
            return 9.0 * g3(rho + 3) / kG13G23 * x * x * std::exp(-x3) *
                   kummer_u((rho + 1) / 3, 5.0 / 3, x3);
        }
        case Case::C: {
            double mu = rat_to_double(*p.mu);
            double rho = rat_to_double(*p.rho);
            if (dist1 <= 0)
                throw EvaluationDomainError("case C weight requires 0 < x < 1");
            // Near x = 1 the supplied distance is the accurate datum; near
            // x = 0 the abscissa is. Reconstruct the other from it.
            const double xc = (dist1 < 0.5) ? 1.0 - dist1 : x;
            const double d1 = (dist1 < 0.5) ? dist1 : 1.0 - xc;
            const double u = d1 * (1 + xc + xc * xc);  // 1 - x^3, stable near x = 1
            const double body = std::pow(u, (mu + rho - 1) / 3);
            (void)dist1;
            const double a = (k == 0) ? mu / 3 : mu / 3 + 1;
            const double b = (rho + 1) / 3;
            const double c = (mu + rho + 2) / 3;
            const double pref =
                (k == 0) ? 3.0 * g3(mu + 2) * std::tgamma(rho / 3 + 1) /
                               (kG13G23 * g3(mu + rho + 2))
                         : 3.0 * g3(mu + 5) * std::tgamma(rho / 3 + 1) /
                               (std::tgamma(2.0 / 3) * std::tgamma(4.0 / 3) * g3(mu + rho + 2));
            const double xx = (k == 0) ? 1.0 : xc * xc;
            if (u <= 0.7) return pref * xx * body * gauss_2f1(a, b, c, u);
            // Near u = 1 use the 1-u = x^3 connection; the x^2 prefactor of U_1
            // absorbs the (x^3)^{c-a-b} singular power exactly (exponent 0).
            const double s = c - a - b;  // 1/3 for k = 0, -2/3 for k = 1
            const double w = xc * xc * xc;
            const double t1 = std::tgamma(c) * std::tgamma(s) * rgamma(c - a) * rgamma(c - b) *
                              gauss_2f1(a, b, a + b - c + 1, w);
            const double t2 = std::tgamma(c) * std::tgamma(-s) * rgamma(a) * rgamma(b) *
                              gauss_2f1(c - a, c - b, s + 1, w);
            const double p1 = (k == 0) ? 1.0 : xc * xc;          // x^2 with the regular term
            const double p2 = (k == 0) ? xc : 1.0;              // x^{3s + 2k} with the singular term
            return pref * body * (p1 * t1 + p2 * t2);
        }
    }
    throw EvaluationDomainError("invalid case enumerator");
}

/// Truncation point beyond which x^{3n+k} U_k underflows (canonical scale).
double canonical_cutoff(Case family) {
    switch (family) {
        case Case::A: return 30.0;
        case Case::B1:
        case Case::B2: return 4.2;
        case Case::C: return 1.0;
    }
    throw EvaluationDomainError("invalid case enumerator");
}

}  // namespace

double support_upper(const FamilyParams& params) {
    if (params.family == Case::C) return 1.0 / alpha_scale(params);
    return std::numeric_limits<double>::infinity();
}

double weight(const FamilyParams& params, int k, double x) {
    const double a = alpha_scale(params);
    return std::pow(a, k + 1) * canonical_weight(params, k, a * x, 1.0 - a * x);
}

std::complex<double> star_weight(const FamilyParams& params, int k, int j, double t) {
    if (j < 0 || j > 2) throw EvaluationDomainError("star ray index j must be 0, 1 or 2");
    const int e = ((j * (2 * k - 1)) % 3 + 3) % 3;
    const std::complex<double> w = std::polar(1.0, 2.0 * M_PI * e / 3.0);
    return w * (weight(params, k, t) / 3.0);
}

double quadrature_moment(const FamilyParams& params, int k, long n) {
    if (n < 0) throw EvaluationDomainError("quadrature_moment requires n >= 0");
    // Canonical moment, then the gamma1 rescaling multiplies it by s^n.
    const double cutoff = canonical_cutoff(params.family);
    double canonical = tanh_sinh(
        [&](double x, double, double dist_b) {
            double db = (params.family == Case::C) ? dist_b : 1.0 - x;
            return std::pow(x, 3 * n + k) * canonical_weight(params, k, x, db);
        },
        0.0, cutoff, 1e-13);
    double s = rat_to_double(params.gamma1 / default_gamma1(params.family, params.mu, params.rho));
    return canonical * std::pow(s, static_cast<double>(n));
}

std::optional<double> b1_particular_u0(const Rat& mu, double x) {
    const double x3 = x * x * x;
    if (mu == 0) return 3.0 / std::tgamma(1.0 / 3) * std::exp(-x3);
    if (mu == 1)
        return 3.0 * std::sqrt(3.0) / (2.0 * std::pow(M_PI, 1.5)) * std::exp(-x3 / 2) *
               std::sqrt(x) * bessel_k(1.0 / 6, x3 / 2);
    if (mu == 2)
        return std::sqrt(3.0) * std::tgamma(1.0 / 3) / (2.0 * M_PI) *
               upper_incomplete_gamma(1.0 / 3, x3);
    return std::nullopt;
}

std::optional<double> b1_particular_u1(const Rat& mu, double x) {
    const double x3 = x * x * x;
    if (mu == Rat(-1, 2))
        return 9.0 * std::sqrt(3.0) / (4.0 * M_PI) * x * std::exp(-x3 / 2) *
               bessel_k(1.0 / 3, x3 / 2);
    if (mu == 0)
        return 9.0 * std::tgamma(5.0 / 3) / kG13G23 * upper_incomplete_gamma(2.0 / 3, x3);
    if (mu == 1)
        return 9.0 * std::sqrt(3.0) / (2.0 * M_PI) * std::exp(-x3) *
               kummer_u(2.0 / 3, 1.0 / 3, x3);
    if (mu == 2)
        return 27.0 * std::tgamma(7.0 / 3) / (2.0 * std::tgamma(1.0 / 3) * std::tgamma(2.0 / 3)) *
               (std::exp(-x3) - x * x * upper_incomplete_gamma(1.0 / 3, x3));
    return std::nullopt;
}

double chebyshev_u0(double x) {
    double s = std::sqrt(1.0 - x * x * x);
    return 9.0 * std::sqrt(3.0) / (4.0 * M_PI) * (std::cbrt(1 + s) - std::cbrt(1 - s));
}

double chebyshev_u1(double x) {
    double s = std::sqrt(1.0 - x * x * x);
    return 27.0 * std::sqrt(3.0) / (8.0 * M_PI) *
           (std::pow(1 + s, 2.0 / 3) - std::pow(1 - s, 2.0 / 3));
}

double faber_u0(double x) {
    double s = std::sqrt(1.0 - x * x * x);
    return 3.0 * std::sqrt(3.0) / (4.0 * M_PI) * (std::cbrt(1 - s) + std::cbrt(1 + s)) / s;
}

double faber_u1(double x) {
    double s = std::sqrt(1.0 - x * x * x);
    return 9.0 * std::sqrt(3.0) / (8.0 * M_PI) *
           (std::pow(1 - s, 2.0 / 3) + std::pow(1 + s, 2.0 / 3)) / s;
}

}  // namespace starpoly
