#include "doctest.h"
#include "starpoly/polynomials.hpp"
#include "test_util.hpp"

using namespace starpoly;
using namespace testutil;

TEST_CASE("case A small polynomials and evaluation") {
    auto P = generate(pA(), 6);
    CHECK(P[0].degree() == 0);
    CHECK(P[3].coeff(3) == 1);
    CHECK(P[3].coeff(0) == -2);  // P_3 = x^3 - 2
    CHECK(P[4].coeff(4) == 1);
    CHECK(P[4].coeff(1) == -8);  // P_4 = x^4 - 8x
    CHECK(P[4].evaluate(2) == 0);
    CHECK(P[4].evaluate(Rat(1, 2)) == Rat(1, 16) - 4);
}

TEST_CASE("dense round trip, mul_x, derivative, residue-class safety") {
    auto P = generate(pA(), 5);
    for (const auto& p : P) {
        SymmetricPolynomial back = from_dense(p.to_dense());
        CHECK(back == p);
    }
    CHECK(mul_x(P[3]).residue == 1);
    CHECK(mul_x(P[3]).coeff(4) == 1);
    SymmetricPolynomial d = derivative(P[4]);
    CHECK(d.coeff(3) == 4);
    CHECK(d.coeff(0) == -8);
    CHECK_THROWS_AS(sub_scaled(P[3], Rat(1), P[4]), DomainError);
    CHECK_THROWS_AS(from_dense({Rat(1), Rat(1)}), DomainError);
}

TEST_CASE("hypergeometric closed forms equal the recurrence output") {
    for (const FamilyParams& p : parameter_grid()) {
        CAPTURE(param_label(p));
        auto P = generate(p, 36);
        for (long n = 0; n <= 36; ++n) {
            CHECK(hypergeometric_closed_form(p, n) == P[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("cubic decomposition components recompose and the component "
          "recurrence regenerates them") {
    for (const FamilyParams& p : parameter_grid()) {
        CAPTURE(param_label(p));
        auto P = generate(p, 38);
        for (int j = 0; j < 3; ++j) {
            auto comp = component_sequence(p, j, 12);
            for (long n = 0; n <= 12; ++n) {
                ComponentPolynomial direct = cubic_components(P[static_cast<std::size_t>(3 * n + j)]);
                CHECK(direct.j == j);
                CHECK(direct.n == n);
                CHECK(direct.coeffs == comp[static_cast<std::size_t>(n)].coeffs);
                CHECK(direct.coeffs.back() == 1);  // monic in y
            }
        }
    }
}

TEST_CASE("derivative sequence satisfies the gamma~ recurrence and the "
          "structure relation") {
    for (const FamilyParams& p : parameter_grid()) {
        CAPTURE(param_label(p));
        auto P = generate(p, 34);
        std::vector<SymmetricPolynomial> Q;
        CHECK_NOTHROW(Q = derivative_sequence(P, p));
        for (long n = 0; n + 3 < static_cast<long>(Q.size()); ++n) {
            CHECK(check_structure_relation(P, Q, p, n));
        }
    }
}

TEST_CASE("derivative sequences reproduce the mapped families") {
    // Case A is an Appell sequence: Q_n = P_n.
    {
        auto P = generate(pA(), 31);
        auto Q = derivative_sequence(P, pA());
        for (std::size_t n = 0; n < Q.size(); ++n) CHECK(Q[n] == P[n]);
    }
    // Q^{B1}(mu) = P^{B2}(mu + 2), Q^{B2}(rho) = P^{B1}(rho + 1),
    // Q^{C}(mu, rho) = P^{C}(rho + 1, mu + 2); canonical normalizations align.
    for (const Rat& mu : {Rat(-1, 2), Rat(0), Rat(2)}) {
        auto Q = derivative_sequence(generate(pB1(mu), 31), pB1(mu));
        auto M = generate(pB2(mu + 2), 30);
        for (std::size_t n = 0; n <= 30; ++n) CHECK(Q[n] == M[n]);
    }
    for (const Rat& rho : {Rat(1, 2), Rat(3)}) {
        auto Q = derivative_sequence(generate(pB2(rho), 31), pB2(rho));
        auto M = generate(pB1(rho + 1), 30);
        for (std::size_t n = 0; n <= 30; ++n) CHECK(Q[n] == M[n]);
    }
    {
        FamilyParams c = pC(1, Rat(3, 2));
        auto Q = derivative_sequence(generate(c, 31), c);
        auto M = generate(pC(Rat(3, 2) + 1, Rat(1) + 2), 30);
        for (std::size_t n = 0; n <= 30; ++n) CHECK(Q[n] == M[n]);
    }
}

TEST_CASE("second derivatives of the B families shift the parameter by 3") {
    for (const Rat& mu : {Rat(-1, 2), Rat(1)}) {
        FamilyParams p = pB1(mu);
        auto P = generate(p, 32);
        auto Q = derivative_sequence(P, p);                    // B2(mu + 2)
        auto R = derivative_sequence(Q, pB2(mu + 2));          // B1(mu + 3)
        auto M = generate(pB1(mu + 3), 28);
        for (std::size_t n = 0; n <= 28; ++n) CHECK(R[n] == M[n]);
    }
}

TEST_CASE("closed component-recurrence tables equal the gamma-products") {
    std::vector<FamilyParams> grid;
    grid.push_back(pA());
    for (const Rat& mu : {Rat(-1, 2), Rat(0), Rat(1), Rat(2), Rat(7, 3)}) grid.push_back(pB1(mu));
    grid.push_back(pC(1, Rat(3, 2)));
    grid.push_back(pC(Rat(-1, 2), Rat(1, 10)));
    grid.push_back(pC(2, 3));
    for (const FamilyParams& p : grid) {
        CAPTURE(param_label(p));
        long beta_hits = 0;
        for (int j = 0; j < 3; ++j) {
            for (long n = 0; n <= 30; ++n) {
                ComponentRecurrenceRow row = component_recurrence(p, j, n);
                ComponentRecurrenceClosed closed = component_recurrence_closed(p, j, n);
                if (closed.beta) {
                    CHECK(*closed.beta == row.beta);
                    ++beta_hits;
                }
                if (n >= 1 && closed.alpha) CHECK(*closed.alpha == row.alpha);
                if (n >= 1 && closed.gamma) CHECK(*closed.gamma == row.gamma);
            }
        }
        CHECK(beta_hits >= 80);  // the tables cover nearly every row
    }
    // Case A has every row in closed form.
    for (int j = 0; j < 3; ++j) {
        for (long n = 1; n <= 30; ++n) {
            ComponentRecurrenceClosed closed = component_recurrence_closed(pA(), j, n);
            CHECK(closed.beta.has_value());
            CHECK(closed.alpha.has_value());
            CHECK(closed.gamma.has_value());
        }
    }
    // Case B2 has no printed table.
    ComponentRecurrenceClosed none = component_recurrence_closed(pB2(3), 0, 5);
    CHECK_FALSE(none.beta.has_value());
}

TEST_CASE("pfq_terminating rejects non-terminating and singular inputs") {
    CHECK_THROWS_AS(pfq_terminating({Rat(1, 2)}, {Rat(1)}, Rat(1)), DomainError);
    CHECK_THROWS_AS(pfq_terminating({Rat(-3)}, {Rat(-1)}, Rat(1)), DomainError);
    auto c = pfq_terminating({Rat(-2)}, {Rat(1)}, Rat(1));
    REQUIRE(c.size() == 3);
    CHECK(c[0] == 1);
    CHECK(c[1] == -2);
    CHECK(c[2] == Rat(1, 2));
}
