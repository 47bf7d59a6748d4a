#include <cmath>
#include <complex>

#include "doctest.h"
#include "starpoly/moments.hpp"
#include "starpoly/quadrature.hpp"
#include "starpoly/specfun.hpp"
#include "starpoly/weights.hpp"
#include "test_util.hpp"

using namespace starpoly;
using namespace testutil;

TEST_CASE("weight values against reference values") {
    for (const auto& entry : load_fixture("weights.json")) {
        const auto& in = entry["input"];
        Case family = case_from_string(in["case"].get<std::string>());
        std::optional<Rat> mu, rho;
        if (in.contains("mu")) mu = parse_rational(in["mu"].get<std::string>());
        if (in.contains("rho")) rho = parse_rational(in["rho"].get<std::string>());
        FamilyParams p = make_params(family, mu, rho);
        int k = in["k"].get<int>();
        double x = std::stod(in["x"].get<std::string>());
        double want = std::stod(entry["expected"].get<std::string>());
        CAPTURE(param_label(p));
        CAPTURE(k);
        CAPTURE(x);
        CHECK(rel_err(weight(p, k, x), want) < 1e-10);
    }
}

TEST_CASE("quadrature moments reproduce the exact moments") {
    for (const FamilyParams& p : parameter_grid()) {
        CAPTURE(param_label(p));
        for (int k = 0; k <= 1; ++k) {
            for (long n = 0; n <= 3; ++n) {
                double exact = rat_to_double(k == 0 ? closed_moment_u0(p, n)
                                                    : closed_moment_u1(p, n));
                CHECK(rel_err(quadrature_moment(p, k, n), exact) < 1e-10);
            }
        }
    }
}

TEST_CASE("int_0^inf Ai = 1/3") {
    double got = tanh_sinh_simple([](double x) { return airy_ai(x); }, 0.0, 30.0, 1e-15);
    CHECK(std::fabs(got - 1.0 / 3.0) < 1e-10);
}

TEST_CASE("particular B1 weights match the generic Tricomi form") {
    for (const Rat& mu : {Rat(-1, 2), Rat(0), Rat(1), Rat(2)}) {
        FamilyParams p = pB1(mu);
        for (double x : {0.4, 0.9, 1.7}) {
            CAPTURE(rat_to_string(mu));
            CAPTURE(x);
            if (auto u0 = b1_particular_u0(mu, x)) {
                CHECK(rel_err(*u0, weight(p, 0, x)) < 1e-10);
            }
            if (auto u1 = b1_particular_u1(mu, x)) {
                CHECK(rel_err(*u1, weight(p, 1, x)) < 1e-10);
            }
        }
    }
    CHECK_FALSE(b1_particular_u0(Rat(1, 3), 0.5).has_value());
}

TEST_CASE("algebraic case C weights at the Chebyshev-like and Faber-like points") {
    FamilyParams cheb = pC(1, Rat(3, 2));
    FamilyParams faber = pC(Rat(-1, 2), 0);
    for (double x : {0.2, 0.5, 0.9}) {
        CAPTURE(x);
        CHECK(rel_err(chebyshev_u0(x), weight(cheb, 0, x)) < 1e-10);
        CHECK(rel_err(chebyshev_u1(x), weight(cheb, 1, x)) < 1e-10);
        CHECK(rel_err(faber_u0(x), weight(faber, 0, x)) < 1e-10);
        CHECK(rel_err(faber_u1(x), weight(faber, 1, x)) < 1e-10);
    }
}

TEST_CASE("B2 weights coincide with shifted B1 weights") {
    FamilyParams b2 = pB2(3);
    FamilyParams b1_up = pB1(4);   // U_0^{B2}(x; rho) = U_0^{B1}(x; rho + 1)
    FamilyParams b1_dn = pB1(1);   // U_1^{B2}(x; rho) = U_1^{B1}(x; rho - 2), rho > 1
    for (double x : {0.5, 1.0, 1.6}) {
        CAPTURE(x);
        CHECK(rel_err(weight(b2, 0, x), weight(b1_up, 0, x)) < 1e-11);
        CHECK(rel_err(weight(b2, 1, x), weight(b1_dn, 1, x)) < 1e-11);
    }
}

TEST_CASE("star weights: ray values, rotation covariance and reconstruction") {
    const std::complex<double> w = std::polar(1.0, 2.0 * M_PI / 3.0);
    for (const FamilyParams& p : {pA(), pB1(Rat(1, 2)), pC(2, 3)}) {
        CAPTURE(param_label(p));
        for (int k = 0; k <= 1; ++k) {
            for (double t : {0.3, 0.8}) {
                // Ray 0 carries one third of the weight on the half line.
                std::complex<double> w0 = star_weight(p, k, 0, t);
                CHECK(rel_err(w0.real(), weight(p, k, t) / 3.0) < 1e-12);
                CHECK(std::fabs(w0.imag()) < 1e-15);
                // W_k(w z) = w^{2k-1} W_k(z) along the star.
                for (int j = 0; j + 1 <= 2; ++j) {
                    std::complex<double> rot =
                        std::pow(w, 2 * k - 1) * star_weight(p, k, j, t);
                    std::complex<double> next = star_weight(p, k, j + 1, t);
                    CHECK(std::abs(rot - next) < 1e-12 * (std::abs(next) + 1e-300));
                }
                // Summing the ray contributions of the x^{3n+k} moment density
                // recovers the half-line weight:
                // sum_j w^{j(3n+k+1)} W_k(w^j t) = U_k(t) (independent of n).
                std::complex<double> total = 0;
                for (int j = 0; j <= 2; ++j) {
                    total += std::pow(w, j * (k + 1)) * star_weight(p, k, j, t);
                }
                CHECK(rel_err(total.real(), weight(p, k, t)) < 1e-12);
                CHECK(std::fabs(total.imag()) < 1e-12 * std::fabs(total.real()));
            }
        }
    }
}

TEST_CASE("support and domain handling") {
    CHECK(std::isinf(support_upper(pA())));
    CHECK(support_upper(pC(2, 3)) == 1.0);
    CHECK_THROWS_AS(weight(pA(), 2, 1.0), EvaluationDomainError);
    CHECK_THROWS_AS(weight(pA(), 0, -1.0), EvaluationDomainError);
    CHECK_THROWS_AS(weight(pC(2, 3), 0, 1.5), EvaluationDomainError);
}
