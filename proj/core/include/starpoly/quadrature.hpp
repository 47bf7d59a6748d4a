/**
 * @file quadrature.hpp
 * @brief Double-exponential (tanh-sinh / exp-sinh) quadrature rules.
 *
 * tanh-sinh integrates over a finite interval and tolerates integrable
 * algebraic endpoint singularities; the integrand receives the distances to
 * both endpoints, computed without cancellation, so factors like
 * (b - x)^sigma can be evaluated accurately arbitrarily close to b.
 * exp-sinh integrates over (0, infinity) for integrands with (at least)
 * exponential decay at infinity and an integrable singularity at 0.
 */
#ifndef STARPOLY_QUADRATURE_HPP
#define STARPOLY_QUADRATURE_HPP

#include <cmath>
#include <cstdlib>

#include "starpoly/rational.hpp"

namespace starpoly {

/**
 * @brief Tanh-sinh quadrature of f over [a, b].
 *
 * @param f Callable f(x, dist_a, dist_b) where dist_a = x - a and
 *          dist_b = b - x are supplied cancellation-free.
 * @param tol Relative tolerance on successive refinements.
 */
template <typename F>
double tanh_sinh(F&& f, double a, double b, double tol = 1e-14) {
    const double half = 0.5 * (b - a);
    // Large enough that even a dist^{-2/3} endpoint singularity is truncated
    // below 1e-14; the supplied endpoint distances stay exact (no rounding
    // against the endpoints), so f can be evaluated there safely.
    const double tmax = 4.3;
    auto sample = [&](double t) -> double {
        const double u = M_PI_2 * std::sinh(t);
        // 1 -+ tanh(u) = 2 exp(-+2u) / (1 + exp(-+2u)), stable at both ends;
        // likewise sech^2(u) must not be formed as 1 - tanh^2(u), which rounds
        // to zero long before the endpoint-singular tail stops mattering.
        const double eb = std::exp(-2.0 * u);
        const double ea = std::exp(2.0 * u);
        const double dist_b = half * 2.0 * eb / (1.0 + eb);
        const double dist_a = half * 2.0 * ea / (1.0 + ea);
        const double x = a + dist_a;  // equals b - dist_b up to rounding
        const double sech = 1.0 / std::cosh(u);
        const double w = half * M_PI_2 * std::cosh(t) * sech * sech;
        if (w == 0.0) return 0.0;
        double v = f(x, dist_a, dist_b) * w;
        return std::isfinite(v) ? v : 0.0;
    };

    double h = 1.0;
    double sum = sample(0.0);
    for (double t = h; t <= tmax; t += h) sum += sample(t) + sample(-t);
    double integral = h * sum;
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        double add = 0;
        for (double t = h; t <= tmax; t += 2 * h) add += sample(t) + sample(-t);
        sum += add;
        double next = h * sum;
        double change = std::fabs(next - integral);
        integral = next;
        if (level >= 3 && change <= tol * std::fabs(integral)) return integral;
    }
    return integral;
}

/// Convenience overload for integrands that only need the abscissa.
template <typename F>
double tanh_sinh_simple(F&& f, double a, double b, double tol = 1e-14) {
    return tanh_sinh([&](double x, double, double) { return f(x); }, a, b, tol);
}

/**
 * @brief Exp-sinh quadrature of f over (0, infinity); x = exp((pi/2) sinh t).
 */
template <typename F>
double exp_sinh(F&& f, double tol = 1e-14) {
    // Wide enough for integrands as singular as x^{a-1} with a ~ 0.005 at the
    // origin (truncation error ~ exp(a u_min) with u_min = -(pi/2) sinh tmax).
    const double tmax = 9.0;
    auto sample = [&](double t) -> double {
        const double u = M_PI_2 * std::sinh(t);
        const double x = std::exp(u);
        const double w = M_PI_2 * std::cosh(t) * x;
        double v = f(x) * w;
        return std::isfinite(v) ? v : 0.0;
    };

    double h = 1.0;
    double sum = sample(0.0);
    for (double t = h; t <= tmax; t += h) sum += sample(t) + sample(-t);
    double integral = h * sum;
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        double add = 0;
        for (double t = h; t <= tmax; t += 2 * h) add += sample(t) + sample(-t);
        sum += add;
        double next = h * sum;
        double change = std::fabs(next - integral);
        integral = next;
        if (level >= 3 && change <= tol * std::fabs(integral)) return integral;
    }
    return integral;
}

}  // namespace starpoly

#endif  // STARPOLY_QUADRATURE_HPP
