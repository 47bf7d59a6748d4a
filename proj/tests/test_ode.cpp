#include <array>

#include "doctest.h"
#include "starpoly/moments.hpp"
#include "starpoly/ode.hpp"
#include "test_util.hpp"

using namespace starpoly;
using namespace testutil;

namespace {

/// True iff (a, b, c, d, e) and the reference tuple differ by one common
/// nonzero rational factor (the equation is only fixed up to scale).
bool proportional(const OdeCoefficients& k, const std::array<Rat, 5>& ref) {
    std::array<Rat, 5> got{k.a, k.b, k.c, k.d, k.e};
    Rat lambda = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        if (ref[i] != 0) {
            lambda = got[i] / ref[i];
            break;
        }
        if (got[i] != 0) return false;
    }
    if (lambda == 0) return false;
    for (std::size_t i = 0; i < 5; ++i) {
        if (got[i] != lambda * ref[i]) return false;
    }
    return true;
}

Rat powm1(long n) { return (n % 2 == 0) ? Rat(1) : Rat(-1); }

}  // namespace

TEST_CASE("P_n and Q_n satisfy their third-order equations exactly, n <= 40") {
    for (const FamilyParams& p : parameter_grid()) {
        CAPTURE(param_label(p));
        auto P = generate(p, 41);
        auto Q = derivative_sequence(P, p);
        for (long n = 1; n <= 40; ++n) {
            CHECK(check_ode(p, P[static_cast<std::size_t>(n)], n));
            CHECK(check_q_ode(p, Q[static_cast<std::size_t>(n)], n));
        }
    }
}

TEST_CASE("case A equation is -y''' + x y' = n y for both P_n and Q_n") {
    for (long n = 1; n <= 40; ++n) {
        for (const OdeCoefficients& k :
             {ode_coefficients(pA(), n), q_ode_coefficients(pA(), n)}) {
            CHECK(k.a == 0);
            CHECK(k.b == 1);
            CHECK(k.c == 0);
            CHECK(k.d == 1);
            CHECK(k.e == n);
        }
    }
}

TEST_CASE("case B1 equation matches its printed coefficient tuple up to scale") {
    for (const Rat& mu : {Rat(-1, 2), Rat(0), Rat(1), Rat(7, 3)}) {
        FamilyParams p = pB1(mu);
        for (long n = 1; n <= 40; ++n) {
            Rat s = powm1(n);
            std::array<Rat, 5> ref = {
                Rat(0), Rat(2, 3), Rat(2),
                2 * (mu + Rat(3, 4) * (s + 3) - (Rat(n) / 2)),
                2 * n * (mu + (Rat(n) / 2) + Rat(3, 4) * s + Rat(5, 4))};
            CAPTURE(n);
            CHECK(proportional(ode_coefficients(p, n), ref));

            // Companion equation for Q_n, also from the printed table:
            // -(2/3) y''' + 2 x^2 y'' + (2 mu - (3/2)((-1)^n - 5) - n) x y'
            //     = (n/2)(4 mu + 2n - 3(-1)^n + 11) y.
            std::array<Rat, 5> qref = {
                Rat(0), Rat(2, 3), Rat(2),
                2 * mu - Rat(3, 2) * (s - 5) - n,
                (Rat(n) / 2) * (4 * mu + 2 * n - 3 * s + 11)};
            CHECK(proportional(q_ode_coefficients(p, n), qref));
        }
    }
}

TEST_CASE("case C equation matches its printed coefficient tuple up to scale") {
    for (const FamilyParams& p : {pC(1, Rat(3, 2)), pC(2, 3), pC(Rat(-1, 2), Rat(1, 10))}) {
        const Rat mu = *p.mu, rho = *p.rho;
        for (long n = 1; n <= 40; ++n) {
            Rat s = powm1(n);
            std::array<Rat, 5> ref = {
                Rat(1), Rat(1), mu + rho + 5,
                Rat(1, 8) * (8 * mu * rho + 14 * mu - 6 * n * n -
                             4 * n * (mu + rho + 2) - 3 * s * (2 * mu - 2 * rho + 1) +
                             18 * rho + 27),
                (Rat(n) / 16) * (4 * mu + 2 * n + 3 * s + 5) * (2 * n - 3 * s + 4 * rho + 3)};
            CAPTURE(param_label(p));
            CAPTURE(n);
            CHECK(proportional(ode_coefficients(p, n), ref));
        }
    }
}

TEST_CASE("ode_coefficients rejects n < 1") {
    CHECK_THROWS_AS(ode_coefficients(pA(), 0), ParameterDomainError);
}
