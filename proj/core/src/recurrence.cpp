#include "starpoly/recurrence.hpp"

namespace starpoly {

Rat theta(const FamilyParams& params, long n) {
    if (n < 1) throw ParameterDomainError("theta requires n >= 1");
    if (n % 2 == 1) {
        // n = 2m - 1
        long m = (n + 1) / 2;
        if (!params.mu) return Rat(1);
        Rat den = m + *params.mu;
        if (den == 0)
            throw ParameterDomainError("degenerate parameter: m + mu = 0 at n = " +
                                       std::to_string(n));
        return (den + 1) / den;
    }
    long m = n / 2;
    if (!params.rho) return Rat(1);
    Rat den = m + *params.rho;
    if (den == 0)
        throw ParameterDomainError("degenerate parameter: m + rho = 0 at n = " +
                                   std::to_string(n));
    return (den + 1) / den;
}

namespace {

/// gamma_n in the canonical normalization (default gamma1) of the family.
Rat gamma_canonical(const FamilyParams& params, long n) {
    switch (params.family) {
        case Case::A:
            return Rat(n) * (n + 1);
        case Case::B1: {
            const Rat& mu = *params.mu;
            if (n % 2 == 1) {  // n = 2m+1
                long m = (n - 1) / 2;
                return Rat(2, 3) * (m + 1) * (2 * m + 1) / (3 * m + mu + 2);
            }
            long m = (n - 2) / 2;  // n = 2m+2
            return Rat(2, 3) * (m + 1) * (2 * m + 3) * (m + mu + 1) /
                   ((3 * m + mu + 2) * (3 * m + mu + 5));
        }
        case Case::B2: {
            const Rat& rho = *params.rho;
            if (n % 2 == 0) {  // n = 2m, m >= 1
                long m = n / 2;
                return Rat(2 * m) * (2 * m + 1) / (3 * (3 * m + rho));
            }
            long m = (n - 1) / 2;  // n = 2m+1
            if (m == 0) return Rat(2) / (3 * (rho + 3));  // (m+rho)/(3m+rho) cancels at m=0
            return Rat(2) * (m + 1) * (2 * m + 1) * (m + rho) /
                   (3 * (3 * m + rho) * (3 * m + rho + 3));
        }
        case Case::C: {
            const Rat& mu = *params.mu;
            const Rat& rho = *params.rho;
            if (n % 2 == 0) {  // n = 2m, m >= 1
                long m = n / 2;
                return Rat(2 * m) * (2 * m + 1) * (m + mu) /
                       ((3 * m + mu - 1) * (3 * m + mu + 2) * (3 * m + rho));
            }
            long m = (n - 1) / 2;  // n = 2m+1
            if (m == 0) return Rat(2) / ((mu + 2) * (rho + 3));  // (m+rho)/(3m+rho) cancels
            return Rat(2) * (m + 1) * (2 * m + 1) * (m + rho) /
                   ((3 * m + mu + 2) * (3 * m + rho) * (3 * m + rho + 3));
        }
    }
    throw ParameterDomainError("invalid case enumerator");
}

}  // namespace

Rat gamma(const FamilyParams& params, long n) {
    if (n < 1) throw ParameterDomainError("gamma requires n >= 1");
    Rat scale = params.gamma1 / default_gamma1(params.family, params.mu, params.rho);
    return gamma_canonical(params, n) * scale;
}

Rat gamma_tilde(const FamilyParams& params, long n) {
    if (n < 1) throw ParameterDomainError("gamma_tilde requires n >= 1");
    return Rat(n) / (n + 2) * theta(params, n) * gamma(params, n + 1);
}

Rat gamma_generic(const FamilyParams& params, long n) {
    if (n < 1) throw ParameterDomainError("gamma_generic requires n >= 1");
    Rat g = params.gamma1;  // gamma_1
    // gamma_{k+2} = ((k+3)/(k+1)) * ((k(theta_k - 1) + 1)/((k+4)(theta_{k+1} - 1) + 1)) * gamma_{k+1}
    // The k = 0 instance (with the convention k*theta_k = 0) seeds gamma_2.
    for (long k = 0; k + 2 <= n; ++k) {
        Rat num = (k == 0) ? Rat(1) : k * (theta(params, k) - 1) + 1;
        Rat den = (k + 4) * (theta(params, k + 1) - 1) + 1;
        if (den == 0)
            throw ParameterDomainError("generic gamma recursion denominator vanished at k = " +
                                       std::to_string(k));
        g *= Rat(k + 3) / (k + 1) * num / den;
    }
    return g;
}

bool check_riccati(const FamilyParams& params, long N) {
    for (long n = 0; n <= N; ++n) {
        Rat t1 = theta(params, n + 1);
        if (t1 == 0)
            throw ParameterDomainError("theta_{n+1} = 0 at n = " + std::to_string(n));
        if (theta(params, n + 3) + Rat(1) / t1 != 2) return false;
    }
    return true;
}

}  // namespace starpoly
