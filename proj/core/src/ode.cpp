#include "starpoly/ode.hpp"

namespace starpoly {

OdeCoefficients ode_coefficients(const FamilyParams& params, long n) {
    if (n < 1) throw ParameterDomainError("ode_coefficients requires n >= 1");
    const Rat tn = theta(params, n);
    const Rat tnp = theta(params, n + 1);
    OdeCoefficients k;
    k.a = (tn - 1) * (tnp - 1);
    Rat f1 = (n == 1) ? Rat(1) : (n - 1) * theta(params, n - 1) - n + 2;
    k.b = gamma(params, n) * f1 * (n * tn - n + 1) * ((n + 1) * tnp - n) / (Rat(n) * (n + 1));
    k.c = tn * tnp - 1 - (n - 3) * (tn - 1) * (tnp - 1);
    k.d = n * tnp - (n - 1) * tn * (2 * tnp - 1);
    k.e = n * tnp;
    return k;
}

OdeCoefficients q_ode_coefficients(const FamilyParams& params, long n) {
    // Differentiating the equation of P_{n+1} once shows Q_n = P'_{n+1}/(n+1)
    // satisfies the same form with (a, b, c + 3a, d + 2c, e - d) taken at n+1.
    OdeCoefficients k = ode_coefficients(params, n + 1);
    return {k.a, k.b, k.c + 3 * k.a, k.d + 2 * k.c, k.e - k.d};
}

SymmetricPolynomial ode_residual(const OdeCoefficients& coeffs, const SymmetricPolynomial& p) {
    SymmetricPolynomial d1 = derivative(p);
    SymmetricPolynomial d2 = derivative(d1);
    SymmetricPolynomial d3 = derivative(d2);
    // (a x^3 - b) p''' + c x^2 p'' + d x p' - e p, all supported on p's class.
    SymmetricPolynomial zero{};
    SymmetricPolynomial acc = sub_scaled(zero, -coeffs.a, mul_x(mul_x(mul_x(d3))));
    acc = sub_scaled(acc, coeffs.b, d3);
    acc = sub_scaled(acc, -coeffs.c, mul_x(mul_x(d2)));
    acc = sub_scaled(acc, -coeffs.d, mul_x(d1));
    acc = sub_scaled(acc, coeffs.e, p);
    return acc;
}

bool check_ode(const FamilyParams& params, const SymmetricPolynomial& p, long n) {
    if (n == 0) return true;
    return ode_residual(ode_coefficients(params, n), p).is_zero();
}

bool check_q_ode(const FamilyParams& params, const SymmetricPolynomial& q, long n) {
    if (n == 0) return true;
    return ode_residual(q_ode_coefficients(params, n), q).is_zero();
}

}  // namespace starpoly
