#include "starpoly/specfun.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "starpoly/quadrature.hpp"

namespace starpoly {

namespace {

/// 1/Gamma(x), zero at the poles.
double rgamma(double x) {
    if (x <= 0 && x == std::floor(x)) return 0.0;
    return 1.0 / std::tgamma(x);
}

/// Nodes/weights of 32-point Gauss-Legendre on [-1, 1] (Newton on P_32).
struct GaussLegendre32 {
    std::array<double, 32> node{}, weight{};
    GaussLegendre32() {
        const int n = 32;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double pp = 0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                pp = n * (x * p1 - p0) / (x * x - 1);
                double dx = p1 / pp;
                x -= dx;
                if (std::fabs(dx) < 1e-16) break;
            }
            node[static_cast<std::size_t>(i)] = x;
            weight[static_cast<std::size_t>(i)] = 2.0 / ((1 - x * x) * pp * pp);
        }
    }
};

const GaussLegendre32& gl32() {
    static const GaussLegendre32 rule;
    return rule;
}

/// Composite 32-point Gauss-Legendre on [a, b] with panel doubling.
template <typename F>
double composite_gl(F&& f, double a, double b) {
    const GaussLegendre32& rule = gl32();
    double prev = 0;
    for (int panels = 2; panels <= 1024; panels *= 2) {
        double total = 0;
        double h = (b - a) / panels;
        for (int p = 0; p < panels; ++p) {
            double lo = a + p * h;
            double acc = 0;
            for (int i = 0; i < 32; ++i)
                acc += rule.weight[static_cast<std::size_t>(i)] *
                       f(lo + 0.5 * h * (1 + rule.node[static_cast<std::size_t>(i)]));
            total += 0.5 * h * acc;
        }
        if (panels > 2 && std::fabs(total - prev) <= 1e-15 * std::fabs(total) + 1e-300)
            return total;
        prev = total;
    }
    return prev;
}

}  // namespace

double bessel_k(double nu, double z) {
    if (z <= 0) throw EvaluationDomainError("bessel_k requires z > 0");
    if (z >= 700) return 0.0;  // below double underflow
    // exp(-z cosh t) reaches the smallest subnormals at cosh t = 745/z.
    double tmax = std::acosh(745.0 / z);
    return composite_gl([&](double t) { return std::exp(-z * std::cosh(t)) * std::cosh(nu * t); },
                        0.0, tmax);
}

namespace {

/// Maclaurin sums of the two standard solutions of y'' = x y and their
/// derivatives: f, g, f', g'.
void airy_series(double x, double& f, double& g, double& fp, double& gp) {
    const double x3 = x * x * x;
    double tf = 1, tg = x, tfp = 0.5 * x * x, tgp = 1;
    f = tf;
    g = tg;
    fp = tfp;
    gp = tgp;
    for (int k = 0; k < 60; ++k) {
        tf *= x3 / ((3 * k + 2) * (3 * k + 3));
        tg *= x3 / ((3 * k + 3) * (3 * k + 4));
        tgp *= x3 / ((3 * k + 1) * (3 * k + 3));
        f += tf;
        g += tg;
        gp += tgp;
        if (k >= 1) {
            tfp *= x3 / ((3 * k) * (3 * k + 2));
            fp += tfp;
        }
        if (std::fabs(tf) < 1e-18 * std::fabs(f) && std::fabs(tg) < 1e-18 * (std::fabs(g) + 1e-30))
            break;
    }
}

}  // namespace

double airy_ai(double x) {
    if (x < 0) throw EvaluationDomainError("airy_ai implemented for x >= 0 only");
    const double c1 = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
    const double c2 = std::pow(3.0, -1.0 / 3.0) / std::tgamma(1.0 / 3.0);
    if (x <= 1.0) {
        double f, g, fp, gp;
        airy_series(x, f, g, fp, gp);
        return c1 * f - c2 * g;
    }
    double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    return 1.0 / M_PI * std::sqrt(x / 3.0) * bessel_k(1.0 / 3.0, zeta);
}

double airy_ai_prime(double x) {
    if (x < 0) throw EvaluationDomainError("airy_ai_prime implemented for x >= 0 only");
    const double c1 = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
    const double c2 = std::pow(3.0, -1.0 / 3.0) / std::tgamma(1.0 / 3.0);
    if (x <= 1.0) {
        double f, g, fp, gp;
        airy_series(x, f, g, fp, gp);
        return c1 * fp - c2 * gp;
    }
    double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    return -x / (M_PI * std::sqrt(3.0)) * bessel_k(2.0 / 3.0, zeta);
}

double kummer_u(double a, double b, double x) {
    if (x <= 0) throw EvaluationDomainError("kummer_u requires x > 0");
    if (a == 0) return 1.0;
    if (a < 0) {
        // Kummer transformation; the new first parameter a - b + 1 must be positive.
        if (a - b + 1 <= 0)
            throw EvaluationDomainError("kummer_u: a < 0 with a - b + 1 <= 0 unsupported");
        return std::pow(x, 1.0 - b) * kummer_u(a - b + 1, 2 - b, x);
    }
    // U(a,b,x) = x^{-a}/Gamma(a) int_0^inf s^{a-1} (1 + s/x)^{b-a-1} e^{-s} ds.
    double integral = exp_sinh(
        [&](double s) {
            return std::pow(s, a - 1) * std::pow(1.0 + s / x, b - a - 1) * std::exp(-s);
        },
        1e-15);
    return std::pow(x, -a) * rgamma(a) * integral;
}

namespace {

double gauss_2f1_series(double a, double b, double c, double z) {
    if (c <= 0 && c == std::floor(c))
        throw EvaluationDomainError("gauss_2f1: c is a nonpositive integer");
    double term = 1, sum = 1;
    for (int k = 0; k < 100000; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (1.0 + k)) * z;
        sum += term;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum)) return sum;
    }
    throw ConvergenceError("gauss_2f1 series did not converge at z = " + std::to_string(z));
}

}  // namespace

double gauss_2f1(double a, double b, double c, double z) {
    if (z >= 1 || z <= -1)
        throw EvaluationDomainError("gauss_2f1 implemented for -1 < z < 1 only");
    if (z <= 0.7) return gauss_2f1_series(a, b, c, z);
    // Linear connection at 1 - z (requires c - a - b non-integer).
    double s = c - a - b;
    if (s == std::floor(s))
        throw EvaluationDomainError("gauss_2f1: integer c - a - b not supported near z = 1");
    double f1 = gauss_2f1_series(a, b, a + b - c + 1, 1 - z);
    double f2 = gauss_2f1_series(c - a, c - b, s + 1, 1 - z);
    double gc = std::tgamma(c);
    return gc * std::tgamma(s) * rgamma(c - a) * rgamma(c - b) * f1 +
           gc * std::tgamma(-s) * rgamma(a) * rgamma(b) * std::pow(1 - z, s) * f2;
}

double upper_incomplete_gamma(double alpha, double z) {
    if (z < 0) throw EvaluationDomainError("upper_incomplete_gamma requires z >= 0");
    if (alpha <= 0 && alpha == std::floor(alpha))
        throw EvaluationDomainError("upper_incomplete_gamma: nonpositive integer alpha");
    if (z == 0) return std::tgamma(alpha);
    if (z < alpha + 1) {
        // Gamma(alpha) minus the lower series.
        double term = 1.0 / alpha, sum = term;
        for (int n = 1; n < 10000; ++n) {
            term *= z / (alpha + n);
            sum += term;
            if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
        }
        return std::tgamma(alpha) - std::exp(-z + alpha * std::log(z)) * sum;
    }
    // Modified Lentz continued fraction.
    const double tiny = 1e-300;
    double bb = z + 1 - alpha;
    double cc = 1 / tiny, dd = 1 / bb, h = dd;
    for (int i = 1; i < 10000; ++i) {
        double an = -i * (i - alpha);
        bb += 2;
        dd = an * dd + bb;
        if (std::fabs(dd) < tiny) dd = tiny;
        cc = bb + an / cc;
        if (std::fabs(cc) < tiny) cc = tiny;
        dd = 1 / dd;
        double del = dd * cc;
        h *= del;
        if (std::fabs(del - 1) < 1e-16) break;
    }
    return std::exp(-z + alpha * std::log(z)) * h;
}

}  // namespace starpoly
