#include "starpoly/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace starpoly {

HessenbergMatrix hessenberg(const FamilyParams& params, long n) {
    if (n < 1) throw ParameterDomainError("hessenberg requires n >= 1");
    HessenbergMatrix h;
    h.n = n;
    for (long k = 1; k <= n - 2; ++k) h.gammas.push_back(gamma(params, k));
    return h;
}

double norm_bound(const FamilyParams& params, long n, double d, double alpha) {
    if (n < 1) throw ParameterDomainError("norm_bound requires n >= 1");
    // log of the similarity weights d_k = d^k (k!)^{alpha/3}.
    auto ld = [&](long k) { return k * std::log(d) + alpha / 3.0 * std::lgamma(k + 1.0); };
    double best = 0;
    for (long k = 1; k <= n; ++k) {
        double row = 0;
        if (k < n) row += std::exp(ld(k + 1) - ld(k));
        if (k >= 3)
            row += rat_to_double(gamma(params, k - 2)) * std::exp(ld(k - 2) - ld(k));
        best = std::max(best, row);
    }
    return best;
}

GrowthConstants growth_constants(const FamilyParams& params) {
    GrowthConstants g;
    switch (params.family) {
        case Case::A: g = {4.0, 2.0}; break;
        case Case::B1:
        case Case::B2: g = {4.0 / 9.0, 1.0}; break;
        case Case::C: g = {4.0 / 27.0, 0.0}; break;
    }
    // gamma_n depends linearly on gamma1, so the growth constant c does too.
    g.c *= rat_to_double(params.gamma1 / default_gamma1(params.family, params.mu, params.rho));
    return g;
}

double largest_zero_bound(const FamilyParams& params, long degree) {
    if (degree < 1) throw ParameterDomainError("largest_zero_bound requires degree >= 1");
    GrowthConstants g = growth_constants(params);
    return 3.0 / std::pow(2.0, 2.0 / 3.0) * std::cbrt(g.c) *
           std::pow(static_cast<double>(degree), g.alpha / 3.0);
}

namespace {

/// Double-precision rows of the four-term component recurrence, plus an
/// evaluator for (P_m^{[j]}(y), d/dy P_m^{[j]}(y)) with dynamic rescaling.
struct ComponentEvaluator {
    long m = 0;
    std::vector<double> beta, alpha, gam;  // gam[k] = gamma_k^{[j]} (gam[0] = 0)

    ComponentEvaluator(const FamilyParams& params, int j, long m_) : m(m_) {
        for (long k = 0; k < m; ++k) {
            ComponentRecurrenceRow row = component_recurrence(params, j, k);
            beta.push_back(rat_to_double(row.beta));
            alpha.push_back(rat_to_double(row.alpha));
            gam.push_back(rat_to_double(row.gamma));
        }
    }

    /// Value and derivative, both multiplied by one common positive scale
    /// factor (sign and root locations are unaffected).
    void eval(double y, double& p, double& dp) const {
        double p0 = 0, p1 = 0, p2 = 1;        // P_{k-2}, P_{k-1}, P_k
        double d0 = 0, d1 = 0, d2 = 0;        // matching derivatives
        for (long k = 0; k < m; ++k) {
            double g = (k >= 1) ? gam[static_cast<std::size_t>(k) - 1] : 0.0;
            double pn = (y - beta[static_cast<std::size_t>(k)]) * p2 -
                        alpha[static_cast<std::size_t>(k)] * p1 - g * p0;
            double dn = p2 + (y - beta[static_cast<std::size_t>(k)]) * d2 -
                        alpha[static_cast<std::size_t>(k)] * d1 - g * d0;
            p0 = p1; p1 = p2; p2 = pn;
            d0 = d1; d1 = d2; d2 = dn;
            double mag = std::max({std::fabs(p0), std::fabs(p1), std::fabs(p2), std::fabs(d0),
                                   std::fabs(d1), std::fabs(d2)});
            if (mag > 1e250) {
                const double s = 1e-250;
                p0 *= s; p1 *= s; p2 *= s;
                d0 *= s; d1 *= s; d2 *= s;
            }
        }
        p = p2;
        dp = d2;
    }

    double value(double y) const {
        double p, dp;
        eval(y, p, dp);
        return p;
    }
};

int sgn(double v) { return (v > 0) - (v < 0); }

/// Refines a bracket [lo, hi] with value signs (slo, shi), slo*shi < 0, by
/// bisection followed by Newton polishing.
double refine_root(const ComponentEvaluator& ev, double lo, double hi, int slo) {
    for (int it = 0; it < 80 && (hi - lo) > 1e-15 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        int sm = sgn(ev.value(mid));
        if (sm == 0) return mid;
        if (sm == slo) lo = mid;
        else hi = mid;
    }
    double y = 0.5 * (lo + hi);
    for (int it = 0; it < 50; ++it) {
        double p, dp;
        ev.eval(y, p, dp);
        if (dp == 0) break;
        double step = p / dp;
        double next = y - step;
        if (next <= lo || next >= hi) break;  // keep the bisection guarantee
        y = next;
        if (std::fabs(step) < 1e-13 * std::fabs(y)) break;
    }
    return y;
}

}  // namespace

ZeroSet positive_zeros(const FamilyParams& params, long degree) {
    if (degree < 0) throw ParameterDomainError("positive_zeros requires degree >= 0");
    ZeroSet zs;
    zs.degree = degree;
    zs.origin_multiplicity = static_cast<int>(degree % 3);
    const long m = degree / 3;
    if (m == 0) return zs;

    const ComponentEvaluator ev(params, static_cast<int>(degree % 3), m);
    const double xmax = 1.05 * largest_zero_bound(params, degree);
    const double ymax = xmax * xmax * xmax;

    // Chebyshev-clustered grid on [0, ymax]; refine until all m simple positive
    // roots of the component polynomial are separated by sign changes.
    std::vector<double> roots;
    for (long M = std::max<long>(8 * m, 16); M <= (1L << 24); M *= 2) {
        roots.clear();
        double yprev = 0;
        int sprev = sgn(ev.value(0.0));
        bool clean = (sprev != 0);
        for (long i = 1; clean && i <= M; ++i) {
            double y = ymax * 0.5 * (1.0 - std::cos(M_PI * static_cast<double>(i) / M));
            int s = sgn(ev.value(y));
            if (s == 0) { clean = false; break; }  // grid hit a root; re-grid denser
            if (s != sprev) roots.push_back(refine_root(ev, yprev, y, sprev));
            yprev = y;
            sprev = s;
        }
        if (clean && static_cast<long>(roots.size()) == m) break;
        if (M == (1L << 24))
            throw ConvergenceError("failed to isolate " + std::to_string(m) +
                                   " positive component roots of degree " +
                                   std::to_string(degree) + " (found " +
                                   std::to_string(roots.size()) + ")");
    }

    for (double y : roots) zs.positive_roots.push_back(std::cbrt(y));
    std::sort(zs.positive_roots.begin(), zs.positive_roots.end());
    const std::complex<double> w = std::polar(1.0, 2.0 * M_PI / 3.0);
    for (double r : zs.positive_roots)
        for (int k = 0; k < 3; ++k)
            zs.star_points.push_back(r * std::pow(w, k));
    return zs;
}

bool check_interlacing(const FamilyParams& params, long n, double tol) {
    if (n < 1) throw ParameterDomainError("check_interlacing requires n >= 1");
    ZeroSet z0 = positive_zeros(params, 3 * n);
    ZeroSet z1 = positive_zeros(params, 3 * n + 1);
    ZeroSet z2 = positive_zeros(params, 3 * n + 2);
    // Chain x_1^{(0)} < x_1^{(1)} < x_1^{(2)} < x_2^{(0)} < ...
    std::vector<double> chain;
    for (long i = 0; i < n; ++i) {
        chain.push_back(z0.positive_roots[static_cast<std::size_t>(i)]);
        chain.push_back(z1.positive_roots[static_cast<std::size_t>(i)]);
        chain.push_back(z2.positive_roots[static_cast<std::size_t>(i)]);
    }
    if (chain.empty() || chain.front() <= 0) return false;
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (chain[i] - chain[i - 1] <= tol * chain[i]) return false;
    return true;
}

}  // namespace starpoly
