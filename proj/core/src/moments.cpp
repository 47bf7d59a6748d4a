#include "starpoly/moments.hpp"

#include <string>

namespace starpoly {

namespace {

Rat table_entry(const std::vector<Rat>& v, long idx, const char* which) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= v.size())
        throw DomainError(std::string("moment table too short: need ") + which + " index " +
                          std::to_string(idx) + ", have " + std::to_string(v.size()));
    return v[static_cast<std::size_t>(idx)];
}

}  // namespace

Rat MomentTable::moment_u0(long m) const {
    if (m < 0 || m % 3 != 0) return Rat(0);
    return table_entry(u0, m / 3, "u0");
}

Rat MomentTable::moment_u1(long m) const {
    if (m < 1 || m % 3 != 1) return Rat(0);
    return table_entry(u1, (m - 1) / 3, "u1");
}

MomentTable moments(const FamilyParams& params, long count) {
    if (count < 1) throw ParameterDomainError("moments requires count >= 1");
    const Rat t1 = theta(params, 1);
    const Rat t2 = theta(params, 2);
    const Rat& g1 = params.gamma1;
    if (2 * t2 - 1 == 0) throw ParameterDomainError("degenerate theta_2 = 1/2 in moment recursion");

    // u0 needs one extra entry to seed the u1 recursion at its last index.
    std::vector<Rat> u0(static_cast<std::size_t>(count) + 1);
    u0[0] = 1;
    for (long n = 0; n + 1 <= count; ++n) {
        Rat lhs = Rat(2) / g1 *
                  ((3 * n + 2) * ((3 * n + 1) * (t1 - 1) * (t2 - 1) + (t1 + t2 - 2)) - (t1 - 2));
        if (lhs == 0)
            throw ParameterDomainError("u0 moment recursion coefficient vanished at n = " +
                                       std::to_string(n));
        Rat rhs = Rat(3 * n + 2) * (3 * n + 1) * t1 * (2 * t2 - 1);
        u0[static_cast<std::size_t>(n) + 1] = rhs * u0[static_cast<std::size_t>(n)] / lhs;
    }

    std::vector<Rat> u1(static_cast<std::size_t>(count));
    for (long n = 0; n < count; ++n) {
        const Rat& m0 = u0[static_cast<std::size_t>(n)];
        const Rat& m0next = u0[static_cast<std::size_t>(n) + 1];
        if (t1 == 2) {
            u1[static_cast<std::size_t>(n)] = Rat(2) * (3 * n + 1) / (3 * n + 2) * m0;
        } else {
            u1[static_cast<std::size_t>(n)] =
                2 * (t1 - 1) * ((3 * n + 2) * t2 - (3 * n + 1)) / (g1 * (t1 - 2) * (2 * t2 - 1)) *
                    m0next -
                Rat(3 * n + 1) * t1 / (t1 - 2) * m0;
        }
    }

    MomentTable table;
    u0.resize(static_cast<std::size_t>(count));
    table.u0 = std::move(u0);
    table.u1 = std::move(u1);
    return table;
}

namespace {

Rat factorial_rat(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

Rat pow_rat(const Rat& base, long n) {
    Rat r(1);
    for (long k = 0; k < n; ++k) r *= base;
    return r;
}

/// (gamma1 / default gamma1)^n, the moment scaling under gamma1 rescaling.
Rat moment_scale(const FamilyParams& params, long n) {
    Rat s = params.gamma1 / default_gamma1(params.family, params.mu, params.rho);
    return pow_rat(s, n);
}

}  // namespace

Rat closed_moment_u0(const FamilyParams& params, long n) {
    if (n < 0) throw ParameterDomainError("closed_moment_u0 requires n >= 0");
    Rat canonical;
    switch (params.family) {
        case Case::A:
            canonical = factorial_rat(3 * n) / (pow_rat(Rat(3), n) * factorial_rat(n));
            break;
        case Case::B1:
            canonical = pochhammer(Rat(1, 3), n) * pochhammer(Rat(2, 3), n) /
                        pochhammer((*params.mu + 2) / 3, n);
            break;
        case Case::B2:
            canonical = pochhammer(Rat(1, 3), n) * pochhammer(Rat(2, 3), n) /
                        pochhammer((*params.rho + 3) / 3, n);
            break;
        case Case::C:
            canonical = pochhammer(Rat(1, 3), n) * pochhammer(Rat(2, 3), n) /
                        (pochhammer((*params.mu + 2) / 3, n) * pochhammer((*params.rho + 3) / 3, n));
            break;
    }
    return canonical * moment_scale(params, n);
}

Rat closed_moment_u1(const FamilyParams& params, long n) {
    if (n < 0) throw ParameterDomainError("closed_moment_u1 requires n >= 0");
    Rat canonical;
    switch (params.family) {
        case Case::A:
            canonical = factorial_rat(3 * n + 1) / (pow_rat(Rat(3), n) * factorial_rat(n));
            break;
        case Case::B1:
            canonical = pochhammer(Rat(2, 3), n) * pochhammer(Rat(4, 3), n) /
                        pochhammer((*params.mu + 5) / 3, n);
            break;
        case Case::B2:
            canonical = pochhammer(Rat(2, 3), n) * pochhammer(Rat(4, 3), n) /
                        pochhammer((*params.rho + 3) / 3, n);
            break;
        case Case::C:
            canonical = pochhammer(Rat(2, 3), n) * pochhammer(Rat(4, 3), n) /
                        (pochhammer((*params.mu + 5) / 3, n) * pochhammer((*params.rho + 3) / 3, n));
            break;
    }
    return canonical * moment_scale(params, n);
}

Rat pair_functional(const MomentTable& table, int k, long m, const SymmetricPolynomial& p) {
    if (k != 0 && k != 1) throw DomainError("pair_functional: k must be 0 or 1");
    Rat acc(0);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (p.coeffs[i] == 0) continue;
        long deg = p.residue + 3 * static_cast<long>(i) + m;
        Rat mom = (k == 0) ? table.moment_u0(deg) : table.moment_u1(deg);
        acc += p.coeffs[i] * mom;
    }
    return acc;
}

bool verify_orthogonality(const FamilyParams& params, const std::vector<SymmetricPolynomial>& P,
                          long N) {
    if (static_cast<long>(P.size()) <= N)
        throw DomainError("verify_orthogonality: polynomial table shorter than N");
    // Largest x-power probed is m + n <= 3N/2; moment index <= N/2 + 1.
    MomentTable table = moments(params, N / 2 + 2);
    for (long n = 0; n <= N; ++n) {
        const SymmetricPolynomial& p = P[static_cast<std::size_t>(n)];
        // <u0, x^m P_n> = 0 for n >= 2m+1, nonzero at n = 2m.
        for (long m = 0; 2 * m + 1 <= n; ++m)
            if (pair_functional(table, 0, m, p) != 0) return false;
        if (n % 2 == 0 && pair_functional(table, 0, n / 2, p) == 0) return false;
        // <u1, x^m P_n> = 0 for n >= 2m+2, nonzero at n = 2m+1.
        for (long m = 0; 2 * m + 2 <= n; ++m)
            if (pair_functional(table, 1, m, p) != 0) return false;
        if (n % 2 == 1 && pair_functional(table, 1, (n - 1) / 2, p) == 0) return false;
    }
    return true;
}

bool check_product_identities(const FamilyParams& params,
                              const std::vector<SymmetricPolynomial>& P, long N) {
    if (static_cast<long>(P.size()) <= 2 * N + 3)
        throw DomainError("check_product_identities: polynomial table shorter than 2N+3");
    MomentTable table = moments(params, N + 2);
    Rat prod_odd(1), prod_even(1);
    for (long n = 0; n <= N; ++n) {
        prod_odd *= gamma(params, 2 * n + 1);
        prod_even *= gamma(params, 2 * n + 2);
        if (pair_functional(table, 0, n + 1, P[static_cast<std::size_t>(2 * n + 2)]) != prod_odd)
            return false;
        if (pair_functional(table, 1, n + 1, P[static_cast<std::size_t>(2 * n + 3)]) != prod_even)
            return false;
    }
    return true;
}

}  // namespace starpoly
