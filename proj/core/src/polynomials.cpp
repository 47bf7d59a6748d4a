#include "starpoly/polynomials.hpp"

#include <algorithm>

namespace starpoly {

bool SymmetricPolynomial::operator==(const SymmetricPolynomial& other) const {
    long top = std::max(degree(), other.degree());
    for (long k = 0; k <= top; ++k)
        if (coeff(k) != other.coeff(k)) return false;
    return true;
}

std::vector<Rat> SymmetricPolynomial::to_dense() const {
    long d = degree();
    if (d < 0) return {};
    std::vector<Rat> dense(static_cast<std::size_t>(d) + 1, Rat(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        dense[static_cast<std::size_t>(residue) + 3 * i] = coeffs[i];
    return dense;
}

Rat SymmetricPolynomial::evaluate(const Rat& x) const {
    if (coeffs.empty()) return Rat(0);
    Rat x3 = x * x * x;
    Rat acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x3 + *it;
    for (int i = 0; i < residue; ++i) acc *= x;
    return acc;
}

SymmetricPolynomial from_dense(const std::vector<Rat>& dense) {
    SymmetricPolynomial p;
    long top = -1;
    for (long k = static_cast<long>(dense.size()) - 1; k >= 0; --k) {
        if (dense[static_cast<std::size_t>(k)] != 0) {
            top = k;
            break;
        }
    }
    if (top < 0) return p;  // zero polynomial
    p.residue = static_cast<int>(top % 3);
    p.coeffs.assign(static_cast<std::size_t>(top / 3) + 1, Rat(0));
    for (long k = 0; k <= top; ++k) {
        const Rat& c = dense[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (k % 3 != p.residue)
            throw DomainError("polynomial support spans more than one residue class mod 3");
        p.coeffs[static_cast<std::size_t>((k - p.residue) / 3)] = c;
    }
    return p;
}

SymmetricPolynomial mul_x(const SymmetricPolynomial& p) {
    SymmetricPolynomial q;
    if (p.coeffs.empty()) return q;
    q.residue = (p.residue + 1) % 3;
    q.coeffs = p.coeffs;
    if (p.residue == 2) {
        // x * x^{2+3i} = x^{3(i+1)}: the residue wraps to 0 and indices shift up.
        q.coeffs.insert(q.coeffs.begin(), Rat(0));
    }
    return q;
}

SymmetricPolynomial sub_scaled(const SymmetricPolynomial& p, const Rat& c,
                               const SymmetricPolynomial& q) {
    if (q.is_zero() || c == 0) return p;
    if (p.is_zero()) {
        SymmetricPolynomial r = q;
        for (auto& v : r.coeffs) v *= -c;
        return r;
    }
    if (p.residue != q.residue)
        throw DomainError("cannot combine polynomials on different residue classes");
    SymmetricPolynomial r = p;
    if (q.coeffs.size() > r.coeffs.size()) r.coeffs.resize(q.coeffs.size(), Rat(0));
    for (std::size_t i = 0; i < q.coeffs.size(); ++i) r.coeffs[i] -= c * q.coeffs[i];
    return r;
}

SymmetricPolynomial derivative(const SymmetricPolynomial& p) {
    std::vector<Rat> dense = p.to_dense();
    if (dense.size() <= 1) return SymmetricPolynomial{};
    std::vector<Rat> out(dense.size() - 1);
    for (std::size_t k = 1; k < dense.size(); ++k)
        out[k - 1] = dense[k] * static_cast<long>(k);
    return from_dense(out);
}

std::vector<SymmetricPolynomial> generate(const FamilyParams& params, long N) {
    require_valid(params);
    if (N < 0) throw DomainError("generate requires N >= 0");
    std::vector<SymmetricPolynomial> P;
    P.reserve(static_cast<std::size_t>(N) + 1);
    P.push_back(SymmetricPolynomial{0, {Rat(1)}});  // P_0 = 1
    if (N >= 1) P.push_back(SymmetricPolynomial{1, {Rat(1)}});  // P_1 = x
    if (N >= 2) P.push_back(SymmetricPolynomial{2, {Rat(1)}});  // P_2 = x^2
    for (long n = 2; n < N; ++n) {
        P.push_back(sub_scaled(mul_x(P[static_cast<std::size_t>(n)]), gamma(params, n - 1),
                               P[static_cast<std::size_t>(n - 2)]));
    }
    return P;
}

std::vector<SymmetricPolynomial> derivative_sequence(const std::vector<SymmetricPolynomial>& P,
                                                     const FamilyParams& params) {
    std::vector<SymmetricPolynomial> Q;
    if (P.size() < 2) return Q;
    Q.reserve(P.size() - 1);
    for (std::size_t n = 0; n + 1 < P.size(); ++n) {
        SymmetricPolynomial q = derivative(P[n + 1]);
        Rat inv = Rat(1) / Rat(static_cast<long>(n) + 1);
        for (auto& c : q.coeffs) c *= inv;
        Q.push_back(std::move(q));
    }
    // Exact Hahn-property verification: Q_{n+1} = x Q_n - gamma~_{n-1} Q_{n-2}.
    for (std::size_t n = 2; n + 1 < Q.size(); ++n) {
        SymmetricPolynomial rhs = sub_scaled(mul_x(Q[n]), gamma_tilde(params, static_cast<long>(n) - 1), Q[n - 2]);
        if (!(rhs == Q[n + 1]))
            throw DomainError("derivative sequence violates the gamma~ recurrence at n = " +
                              std::to_string(n + 1));
    }
    return Q;
}

bool check_structure_relation(const std::vector<SymmetricPolynomial>& P,
                              const std::vector<SymmetricPolynomial>& Q,
                              const FamilyParams& params, long n) {
    if (n < 0 || static_cast<std::size_t>(n + 3) >= P.size() ||
        static_cast<std::size_t>(n + 3) >= Q.size())
        throw DomainError("check_structure_relation: n out of range of supplied sequences");
    Rat coeff = (n + 1) * gamma(params, n + 2) - (n + 3) * gamma_tilde(params, n + 1);
    SymmetricPolynomial rhs = sub_scaled(Q[static_cast<std::size_t>(n + 3)], -coeff,
                                         Q[static_cast<std::size_t>(n)]);
    return rhs == P[static_cast<std::size_t>(n + 3)];
}

ComponentPolynomial cubic_components(const SymmetricPolynomial& p) {
    if (p.coeffs.empty()) throw DomainError("cubic_components: zero polynomial has no component");
    ComponentPolynomial c;
    c.j = p.residue;
    c.n = static_cast<long>(p.coeffs.size()) - 1;
    c.coeffs = p.coeffs;
    return c;
}

namespace {

/// Parent gamma with the convention gamma_m = 0 for m <= 0.
Rat gamma_or_zero(const FamilyParams& params, long m) {
    return m >= 1 ? gamma(params, m) : Rat(0);
}

}  // namespace

ComponentRecurrenceRow component_recurrence(const FamilyParams& params, int j, long n) {
    if (j < 0 || j > 2) throw DomainError("component_recurrence: j must be in {0,1,2}");
    if (n < 0) throw DomainError("component_recurrence: n must be >= 0");
    auto g = [&](long m) { return gamma_or_zero(params, m); };
    ComponentRecurrenceRow row;
    row.beta = g(3 * n - 1 + j) + g(3 * n + j) + g(3 * n + 1 + j);
    if (n >= 1) {
        row.alpha = g(3 * n - 2 + j) * g(3 * n + j) + g(3 * n - 1 + j) * g(3 * n - 3 + j) +
                    g(3 * n - 2 + j) * g(3 * n - 1 + j);
        row.gamma = g(3 * n - 2 + j) * g(3 * n + j) * g(3 * n + 2 + j);
    } else {
        row.alpha = 0;
        row.gamma = 0;
    }
    return row;
}

namespace {

/// Single printed fraction pre * num / den with an integer prefactor pre that
/// may vanish identically (then the value is 0 regardless of den). A vanishing
/// denominator with nonzero prefactor means the printed formula is undefined
/// at these parameters (removable singularity): nullopt.
std::optional<Rat> frac1(long pre, const Rat& num, const Rat& den) {
    if (pre == 0) return Rat(0);
    if (den == 0) return std::nullopt;
    return pre * num / den;
}

/// Adds a fraction term to an optional accumulator with the same conventions.
void add_frac(std::optional<Rat>& acc, long pre, const Rat& num, const Rat& den) {
    if (!acc) return;
    if (pre == 0) return;
    if (den == 0) {
        acc = std::nullopt;
        return;
    }
    *acc += pre * num / den;
}

/// Case A closed forms (canonical gamma1 = 2), valid for all n in range.
ComponentRecurrenceClosed closed_case_a(long j, long n) {
    ComponentRecurrenceClosed out;
    Rat J(j), N(n);
    out.beta = 3 * (J * J + 6 * J * N + J + 9 * N * N) + 9 * N + 2;
    if (n >= 1) {
        Rat b = J + 3 * N;
        out.alpha = 3 * (b - 2) * (b - 1) * (b - 1) * b;
        out.gamma = (b - 2) * (b - 1) * b * (b + 1) * (b + 2) * (b + 3);
    }
    return out;
}

/// Case B1 closed forms (canonical normalization), indexed by parity of the row.
ComponentRecurrenceClosed closed_case_b1(const Rat& mu, long j, long m) {
    ComponentRecurrenceClosed out;
    const bool odd = (m % 2 != 0);
    const long n = odd ? (m - 1) / 2 : m / 2;
    const Rat u = mu;  // shorthand
    auto D = [&](long c) -> Rat { return u + 9 * n + c; };  // mu + 9n + c
    if (j == 0) {
        if (!odd) {
            out.beta = frac1(2, u + 3 * n * (3 * u + 9 * n * (2 * u + 14 * n + 3) - 2) - 1,
                             3 * D(-1) * D(2));
            if (m >= 1) {
                out.alpha = frac1(4 * n * (3 * n - 1) * (6 * n - 1),
                                  -3 * u * u - 5 * u + Rat(702) * n * n * n +
                                      27 * (8 * u - 9) * n * n + 3 * (6 * (u - 3) * u - 17) * n + 8,
                                  3 * D(-4) * D(-1) * D(-1) * D(2));
                out.gamma = frac1(8 * n * (2 * n + 1) * (3 * n - 1) * (3 * n + 1) * (6 * n - 1) *
                                      (6 * n + 1),
                                  (u + 3 * n - 1) * (u + 3 * n) * (u + 3 * n + 1),
                                  3 * D(-4) * D(-1) * D(-1) * D(2) * D(2) * D(5));
            }
        } else {
            out.beta = frac1(2, 19 * u + 3 * n * (21 * u + 9 * n * (2 * u + 10 * n + 17) + 77) + 32,
                             3 * D(2) * D(8));
            out.alpha = frac1(4 * (2 * n + 1) * (3 * n + 1) * (6 * n + 1),
                              2 * u +
                                  3 * (u * u + Rat(117) * n * n * n + 9 * (4 * u + 9) * n * n +
                                       (3 * u * (u + 6) + 5) * n) -
                                  5,
                              3 * D(-1) * D(2) * D(2) * D(5));
            out.gamma = frac1(8 * (n + 1) * (2 * n + 1) * (3 * n + 1) * (3 * n + 2) * (6 * n + 1) *
                                  (6 * n + 5),
                              Rat(1), 3 * D(2) * D(5) * D(8));
        }
    } else if (j == 1) {
        if (!odd) {
            out.beta = frac1(1, 8 * (u - 1) + 6 * n * (9 * u + 9 * n * (2 * u + 10 * n + 7) + 5),
                             3 * D(-1) * D(5));
            if (m >= 1) {
                out.alpha = frac1(4 * n * (36 * n * n - 1),
                                  -4 * u +
                                      3 * n * (3 * (u - 2) * u + Rat(117) * n * n +
                                               36 * (u - 1) * n - 10) +
                                      4,
                                  3 * D(-4) * D(-1) * D(-1) * D(2));
                out.gamma = frac1(8 * n * (2 * n + 1) * (3 * n + 1) * (3 * n + 2) * (6 * n - 1) *
                                      (6 * n + 1),
                                  Rat(1), 3 * D(-1) * D(2) * D(5));
            }
        } else {
            out.beta =
                frac1(2, 31 * u + 3 * n * (27 * u + 9 * n * (2 * u + 14 * n + 31) + 202) + 143,
                      3 * D(5) * D(8));
            out.alpha = frac1(4 * (2 * n + 1) * (3 * n + 1) * (3 * n + 2),
                              (u + 2) * (9 * u + 37) + Rat(702) * n * n * n +
                                  27 * (8 * u + 43) * n * n + 3 * (6 * u * (u + 13) + 187) * n,
                              3 * D(2) * D(5) * D(5) * D(8));
            out.gamma = frac1(8 * (n + 1) * (2 * n + 1) * (3 * n + 1) * (3 * n + 2) * (6 * n + 5) *
                                  (6 * n + 7),
                              (u + 3 * n + 1) * (u + 3 * n + 2) * (u + 3 * n + 3),
                              3 * D(2) * D(5) * D(5) * D(8) * D(8) * D(11));
        }
    } else {
        if (!odd) {
            out.beta =
                frac1(1, 20 * (u + 2) + 6 * n * (15 * u + 9 * n * (2 * u + 14 * n + 17) + 58),
                      3 * D(2) * D(5));
            if (m >= 1) {
                out.alpha = frac1(4 * n * (3 * n + 1) * (6 * n + 1),
                                  u +
                                      3 * (u * u + Rat(234) * n * n * n + 9 * (8 * u + 17) * n * n +
                                           (6 * u * (u + 5) + 7) * n) -
                                      10,
                                  3 * D(-1) * D(2) * D(2) * D(5));
                out.gamma = frac1(8 * n * (2 * n + 1) * (3 * n + 1) * (3 * n + 2) * (6 * n + 1) *
                                      (6 * n + 5),
                                  (u + 3 * n) * (u + 3 * n + 1) * (u + 3 * n + 2),
                                  3 * D(-1) * D(2) * D(2) * D(5) * D(5) * D(8));
            }
        } else {
            out.beta =
                frac1(2, 46 * u + 3 * n * (33 * u + 9 * n * (2 * u + 10 * n + 27) + 209) + 170,
                      3 * D(5) * D(11));
            out.alpha = frac1(4 * (2 * n + 1) * (3 * n + 2) * (6 * n + 5),
                              2 * (u + 2) * (3 * u + 10) + Rat(351) * n * n * n +
                                  54 * (2 * u + 11) * n * n + 3 * (3 * u * (u + 14) + 98) * n,
                              3 * D(2) * D(5) * D(5) * D(8));
            out.gamma = frac1(8 * (n + 1) * (2 * n + 1) * (3 * n + 2) * (3 * n + 4) * (6 * n + 5) *
                                  (6 * n + 7),
                              Rat(1), 3 * D(5) * D(8) * D(11));
        }
    }
    return out;
}

/// Combines an outer printed factor pre/den with an already-accumulated inner
/// bracket (the three-term sums of the Case C alpha rows).
std::optional<Rat> outer_frac(long pre, const Rat& den, const std::optional<Rat>& inner) {
    if (pre == 0) return Rat(0);
    if (!inner || den == 0) return std::nullopt;
    return pre * *inner / den;
}

/// Case C closed forms (canonical normalization). The odd-index gamma rows have
/// no reliable printed closed form and are left unset.
ComponentRecurrenceClosed closed_case_c(const Rat& mu, const Rat& rho, long j, long m) {
    ComponentRecurrenceClosed out;
    const bool odd = (m % 2 != 0);
    const long n = odd ? (m - 1) / 2 : m / 2;
    auto M = [&](long c) -> Rat { return mu + 9 * n + c; };   // 9n + mu + c
    auto R = [&](long c) -> Rat { return rho + 9 * n + c; };  // 9n + rho + c
    if (j == 0) {
        if (!odd) {
            std::optional<Rat> beta = Rat(0);
            add_frac(beta, 2 * (2 * n + 1) * (3 * n + 1) * (6 * n + 1), Rat(1), M(2) * R(3));
            add_frac(beta, -4 * n * (3 * n - 1) * (6 * n - 1), Rat(1), M(-1) * R(-3));
            out.beta = beta;
            if (m >= 1) {
                std::optional<Rat> inner = Rat(0);
                add_frac(inner, 6 * n - 1, (mu + 3 * n - 1) * (rho + 3 * n - 1), Rat(1));
                add_frac(inner, 6 * n - 3, M(-1) * (rho + 3 * n - 2) * (rho + 3 * n - 1), R(-6));
                add_frac(inner, 6 * n + 1, (mu + 3 * n - 1) * (mu + 3 * n) * R(-3), M(2));
                out.alpha = outer_frac(6 * n * (6 * n - 2) * (6 * n - 1),
                                       M(-4) * M(-1) * M(-1) * R(-3) * R(-3) * R(0), inner);
                out.gamma = frac1(6 * n * (6 * n - 2) * (6 * n - 1) * (6 * n + 1) * (6 * n + 2) *
                                      (6 * n + 3),
                                  (mu + 3 * n - 1) * (mu + 3 * n) * (mu + 3 * n + 1),
                                  M(-4) * M(-1) * M(-1) * M(2) * M(2) * M(5) * R(-3) * R(0) * R(3));
            }
        } else {
            std::optional<Rat> beta = Rat(0);
            add_frac(beta, 4 * (n + 1) * (3 * n + 2) * (6 * n + 5), Rat(1), M(8) * R(6));
            add_frac(beta, -2 * (2 * n + 1) * (3 * n + 1) * (6 * n + 1), Rat(1), M(2) * R(3));
            out.beta = beta;
            std::optional<Rat> inner = Rat(0);
            add_frac(inner, 2 * (3 * n + 1) * (3 * n + 1), (mu + 3 * n + 1) * (rho + 3 * n),
                     Rat(1));
            add_frac(inner, 6 * n * (3 * n + 1), (mu + 3 * n) * (mu + 3 * n + 1) * R(3), M(-1));
            add_frac(inner, (3 * n + 2) * (6 * n + 2), M(2) * (rho + 3 * n) * (rho + 3 * n + 1),
                     R(6));
            out.alpha = outer_frac(6 * (2 * n + 1) * (6 * n + 1),
                                   M(2) * M(2) * M(5) * R(0) * R(3) * R(3), inner);
            // gamma_{2n+1}^{[0]}: printed row duplicates gamma_{2n}^{[0]}; no closed form used.
        }
    } else if (j == 1) {
        if (!odd) {
            std::optional<Rat> beta = Rat(0);
            add_frac(beta, 4 * (2 * n + 1) * (3 * n + 1) * (3 * n + 2), Rat(1), M(5) * R(3));
            add_frac(beta, 2 * n - 72 * n * n * n, Rat(1), M(-1) * R(0));
            out.beta = beta;
            if (m >= 1) {
                std::optional<Rat> inner = Rat(0);
                add_frac(inner, 6 * n, (mu + 3 * n) * (rho + 3 * n - 1), Rat(1));
                add_frac(inner, 6 * n + 2, M(-1) * (rho + 3 * n) * (rho + 3 * n - 1), R(3));
                add_frac(inner, 6 * n - 2, (mu + 3 * n - 1) * (mu + 3 * n) * R(0), M(-4));
                out.alpha = outer_frac(6 * n * (6 * n - 1) * (6 * n + 1),
                                       M(-1) * M(-1) * M(2) * R(-3) * R(0) * R(0), inner);
                out.gamma =
                    frac1(6 * n * (6 * n - 1) * (6 * n + 1) * (6 * n + 2) * (6 * n + 3) *
                              (6 * n + 4),
                          (rho + 3 * n - 1) * (rho + 3 * n) * (rho + 3 * n + 1),
                          M(-1) * M(2) * M(5) * R(-3) * R(0) * R(0) * R(3) * R(3) * R(6));
            }
        } else {
            std::optional<Rat> beta = Rat(0);
            add_frac(beta, 2 * (n + 1) * (6 * n + 5) * (6 * n + 7), Rat(1), M(8) * R(9));
            add_frac(beta, -4 * (2 * n + 1) * (3 * n + 1) * (3 * n + 2), Rat(1), M(5) * R(3));
            out.beta = beta;
            std::optional<Rat> inner = Rat(0);
            add_frac(inner, 6 * (2 * n + 1) * (3 * n + 1) * (3 * n + 2),
                     (mu + 3 * n + 1) * (rho + 3 * n + 1), Rat(1));
            add_frac(inner, (3 * n + 2) * (6 * n + 1) * (6 * n + 2),
                     M(5) * (rho + 3 * n) * (rho + 3 * n + 1), R(0));
            add_frac(inner, (3 * n + 1) * (6 * n + 4) * (6 * n + 5),
                     (mu + 3 * n + 1) * (mu + 3 * n + 2) * R(3), M(8));
            out.alpha =
                outer_frac(6 * (2 * n + 1), M(2) * M(5) * M(5) * R(3) * R(3) * R(6), inner);
            // gamma_{2n+1}^{[1]}: printed row duplicates gamma_{2n}^{[1]}; no closed form used.
        }
    } else {
        if (!odd) {
            std::optional<Rat> beta = Rat(0);
            add_frac(beta, 2 * (2 * n + 1) * (3 * n + 2) * (6 * n + 5), Rat(1), M(5) * R(6));
            add_frac(beta, -4 * n * (3 * n + 1) * (6 * n + 1), Rat(1), M(2) * R(0));
            out.beta = beta;
            if (m >= 1) {
                std::optional<Rat> inner = Rat(0);
                add_frac(inner, 6 * n + 1, (mu + 3 * n) * (rho + 3 * n), Rat(1));
                add_frac(inner, 6 * n - 1, M(2) * (rho + 3 * n - 1) * (rho + 3 * n), R(-3));
                add_frac(inner, 6 * n + 3, (mu + 3 * n) * (mu + 3 * n + 1) * R(0), M(5));
                out.alpha = outer_frac(6 * n * (6 * n + 1) * (6 * n + 2),
                                       M(-1) * M(2) * M(2) * R(0) * R(0) * R(3), inner);
                out.gamma = frac1(6 * n * (6 * n + 1) * (6 * n + 2) * (6 * n + 3) * (6 * n + 4) *
                                      (6 * n + 5),
                                  (mu + 3 * n) * (mu + 3 * n + 1) * (mu + 3 * n + 2),
                                  M(-1) * M(2) * M(2) * M(5) * M(5) * M(8) * R(0) * R(3) * R(6));
            }
        } else {
            std::optional<Rat> beta = Rat(0);
            add_frac(beta, 4 * (n + 1) * (3 * n + 4) * (6 * n + 7), Rat(1), M(11) * R(9));
            add_frac(beta, -2 * (2 * n + 1) * (3 * n + 2) * (6 * n + 5), Rat(1), M(5) * R(6));
            out.beta = beta;
            std::optional<Rat> inner = Rat(0);
            add_frac(inner, 2 * (3 * n + 2) * (3 * n + 2), (mu + 3 * n + 2) * (rho + 3 * n + 1),
                     Rat(1));
            add_frac(inner, 6 * (n + 1) * (3 * n + 2), M(5) * (rho + 3 * n + 1) * (rho + 3 * n + 2),
                     R(9));
            add_frac(inner, (3 * n + 1) * (6 * n + 4),
                     (mu + 3 * n + 1) * (mu + 3 * n + 2) * R(6), M(2));
            out.alpha = outer_frac(6 * (2 * n + 1) * (6 * n + 5),
                                   M(5) * M(5) * M(8) * R(3) * R(6) * R(6), inner);
            // gamma_{2n+1}^{[2]}: printed row duplicates gamma_{2n}^{[2]}; no closed form used.
        }
    }
    return out;
}

}  // namespace

ComponentRecurrenceClosed component_recurrence_closed(const FamilyParams& params, int j, long n) {
    if (j < 0 || j > 2) throw DomainError("component_recurrence_closed: j must be in {0,1,2}");
    if (n < 0) throw DomainError("component_recurrence_closed: n must be >= 0");
    ComponentRecurrenceClosed out;
    switch (params.family) {
        case Case::A:
            out = closed_case_a(j, n);
            break;
        case Case::B1:
            out = closed_case_b1(*params.mu, j, n);
            break;
        case Case::C:
            out = closed_case_c(*params.mu, *params.rho, j, n);
            break;
        case Case::B2:
            return out;  // no printed table for B2
    }
    // The tables are stated in the canonical normalization; a rescaled gamma1
    // multiplies beta by s, alpha by s^2 and gamma by s^3.
    Rat s = params.gamma1 / default_gamma1(params.family, params.mu, params.rho);
    if (s != 1) {
        if (out.beta) *out.beta *= s;
        if (out.alpha) *out.alpha *= s * s;
        if (out.gamma) *out.gamma *= s * s * s;
    }
    return out;
}

std::vector<ComponentPolynomial> component_sequence(const FamilyParams& params, int j, long N) {
    if (j < 0 || j > 2) throw DomainError("component_sequence: j must be in {0,1,2}");
    std::vector<std::vector<Rat>> polys;  // coefficient vectors in y
    polys.push_back({Rat(1)});
    for (long n = 0; n < N; ++n) {
        ComponentRecurrenceRow row = component_recurrence(params, j, n);
        const auto& pn = polys[static_cast<std::size_t>(n)];
        std::vector<Rat> next(pn.size() + 1, Rat(0));
        for (std::size_t i = 0; i < pn.size(); ++i) {
            next[i + 1] += pn[i];
            next[i] -= row.beta * pn[i];
        }
        if (n >= 1) {
            const auto& pm = polys[static_cast<std::size_t>(n - 1)];
            for (std::size_t i = 0; i < pm.size(); ++i) next[i] -= row.alpha * pm[i];
        }
        if (n >= 2) {
            ComponentRecurrenceRow prev = component_recurrence(params, j, n - 1);
            const auto& pk = polys[static_cast<std::size_t>(n - 2)];
            for (std::size_t i = 0; i < pk.size(); ++i) next[i] -= prev.gamma * pk[i];
        }
        polys.push_back(std::move(next));
    }
    std::vector<ComponentPolynomial> out;
    out.reserve(polys.size());
    for (long n = 0; n <= N; ++n) {
        out.push_back(ComponentPolynomial{j, n, polys[static_cast<std::size_t>(n)]});
    }
    return out;
}

std::vector<Rat> pfq_terminating(const std::vector<Rat>& num, const std::vector<Rat>& den,
                                 const Rat& scale) {
    long n = -1;
    for (const auto& a : num) {
        if (a <= 0 && a.get_den() == 1) {
            long v = -static_cast<long>(a.get_num().get_si());
            if (n >= 0)
                throw DomainError("pfq_terminating: more than one nonpositive-integer "
                                  "numerator parameter");
            n = v;
        }
    }
    if (n < 0)
        throw DomainError("pfq_terminating: no nonpositive-integer numerator parameter");
    for (const auto& b : den) {
        if (b.get_den() == 1 && b <= 0 && b >= -Rat(n) + 1)
            throw DomainError("pfq_terminating: denominator Pochhammer vanishes within the "
                              "truncation range");
    }
    std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1);
    Rat term = 1;
    for (long k = 0; k <= n; ++k) {
        coeffs[static_cast<std::size_t>(k)] = term;
        if (k == n) break;
        Rat factor = scale / (k + 1);
        for (const auto& a : num) factor *= a + k;
        for (const auto& b : den) factor /= b + k;
        term *= factor;
    }
    return coeffs;
}

namespace {

/// Lower parameter pair (c_j, d_j) for residue class j.
std::pair<Rat, Rat> lower_pair(int j) {
    switch (j) {
        case 0: return {Rat(1, 3), Rat(2, 3)};
        case 1: return {Rat(2, 3), Rat(4, 3)};
        default: return {Rat(4, 3), Rat(5, 3)};
    }
}

/// mu-branch upper parameter of the 2F2/3F2 closed forms:
/// s = n/2 + (-1)^n/4 + mu/3 + 5/12 + j/2  (j = 0,1,2 with alternating sign of the
/// (-1)^n/4 term), stated per residue class.
Rat s_mu(const Rat& mu, long n, int j) {
    Rat sign((n % 2 == 0) ? 1 : -1);
    if (j == 1) sign = -sign;
    Rat base = Rat(n, 2) + sign / 4 + mu / 3;
    switch (j) {
        case 0: return base + Rat(5, 12);
        case 1: return base + Rat(11, 12);
        default: return base + Rat(17, 12);
    }
}

/// rho-branch upper parameter (the derivative-shifted branch).
Rat s_rho(const Rat& rho, long n, int j) {
    Rat sign((n % 2 == 0) ? 1 : -1);
    if (j != 1) sign = -sign;
    Rat base = Rat(n, 2) + sign / 4 + rho / 3;
    switch (j) {
        case 0: return base + Rat(1, 4);
        case 1: return base + Rat(3, 4);
        default: return base + Rat(5, 4);
    }
}

}  // namespace

SymmetricPolynomial hypergeometric_closed_form(const FamilyParams& params, long degree) {
    require_valid(params);
    if (degree < 0) throw DomainError("hypergeometric_closed_form requires degree >= 0");
    const long n = degree / 3;
    const int j = static_cast<int>(degree % 3);
    auto [c, d] = lower_pair(j);

    std::vector<Rat> upper{Rat(-n)};
    std::vector<Rat> lower{c, d};
    Rat scale(1);
    Rat prefactor = pochhammer(c, n) * pochhammer(d, n);
    if (n % 2 != 0) prefactor = -prefactor;

    switch (params.family) {
        case Case::A:
            scale = Rat(1, 9);
            for (long k = 0; k < n; ++k) prefactor *= 9;
            break;
        case Case::B1:
            upper.push_back(s_mu(*params.mu, n, j));
            break;
        case Case::B2:
            // P^{B2}(x; rho) coincides with the derivative family of B1 at mu = rho - 2.
            upper.push_back(s_rho(*params.rho, n, j));
            break;
        case Case::C:
            upper.push_back(s_mu(*params.mu, n, j));
            upper.push_back(s_rho(*params.rho, n, j));
            break;
    }
    for (std::size_t i = 1; i < upper.size(); ++i) {
        Rat p = pochhammer(upper[i], n);
        if (p == 0)
            throw DomainError("hypergeometric closed form: Pochhammer normalizer vanishes");
        prefactor /= p;
    }

    std::vector<Rat> series = pfq_terminating(upper, lower, scale);
    SymmetricPolynomial result;
    result.residue = j;
    result.coeffs.resize(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k)
        result.coeffs[static_cast<std::size_t>(k)] = prefactor * series[static_cast<std::size_t>(k)];

    // A free consistency check of the printed normalizers: the result is monic.
    if (result.coeffs.back() != 1)
        throw DomainError("hypergeometric closed form is not monic (normalizer mismatch)");

    // Canonical -> requested gamma1: the coefficient of x^{degree-3k} carries k
    // gamma factors, each linear in gamma1.
    Rat s = params.gamma1 / default_gamma1(params.family, params.mu, params.rho);
    if (s != 1) {
        Rat power(1);
        for (long k = 0; k <= n; ++k) {
            result.coeffs[static_cast<std::size_t>(n - k)] *= power;
            power *= s;
        }
    }
    return result;
}

}  // namespace starpoly
