#include "starpoly/family.hpp"

#include <sstream>

namespace starpoly {

Case case_from_string(const std::string& s) {
    if (s == "A") return Case::A;
    if (s == "B1") return Case::B1;
    if (s == "B2") return Case::B2;
    if (s == "C") return Case::C;
    throw ParameterDomainError("unknown case '" + s + "' (expected A, B1, B2 or C)");
}

std::string case_to_string(Case c) {
    switch (c) {
        case Case::A: return "A";
        case Case::B1: return "B1";
        case Case::B2: return "B2";
        case Case::C: return "C";
    }
    throw ParameterDomainError("invalid case enumerator");
}

Rat default_gamma1(Case family, const std::optional<Rat>& mu, const std::optional<Rat>& rho) {
    auto safe_div = [](const Rat& num, const Rat& den) {
        if (den == 0)
            throw ParameterDomainError("default gamma1 undefined: vanishing denominator");
        return num / den;
    };
    switch (family) {
        case Case::A:
            return Rat(2);
        case Case::B1:
            if (!mu) throw ParameterDomainError("case B1 requires mu");
            return safe_div(Rat(2), 3 * (*mu + 2));
        case Case::B2:
            if (!rho) throw ParameterDomainError("case B2 requires rho");
            return safe_div(Rat(2), 3 * (*rho + 3));
        case Case::C:
            if (!mu || !rho) throw ParameterDomainError("case C requires mu and rho");
            return safe_div(Rat(2), (*mu + 2) * (*rho + 3));
    }
    throw ParameterDomainError("invalid case enumerator");
}

FamilyParams make_params(Case family, std::optional<Rat> mu, std::optional<Rat> rho,
                         std::optional<Rat> gamma1) {
    FamilyParams p;
    p.family = family;
    p.mu = std::move(mu);
    p.rho = std::move(rho);
    if (gamma1) {
        p.gamma1 = *gamma1;
    } else {
        p.gamma1 = default_gamma1(family, p.mu, p.rho);
    }
    return p;
}

namespace {

/// True iff theta belongs to the degenerate set {(n-1)/n : n >= 1}.
bool theta_degenerate(const Rat& theta) {
    // theta = (n-1)/n  <=>  n (1 - theta) = 1  <=>  n = 1/(1-theta) a positive integer.
    if (theta == 1) return false;
    Rat n = Rat(1) / (Rat(1) - theta);
    return n > 0 && n.get_den() == 1;
}

}  // namespace

ValidationReport validate_params(const FamilyParams& params) {
    ValidationReport report;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.violations.push_back(msg);
    };

    if (params.gamma1 <= 0) {
        fail("gamma1 must be positive, got " + rat_to_string(params.gamma1));
    }

    const bool needs_mu = params.family == Case::B1 || params.family == Case::C;
    const bool needs_rho = params.family == Case::B2 || params.family == Case::C;
    if (needs_mu && !params.mu) fail("case " + case_to_string(params.family) + " requires mu");
    if (!needs_mu && params.mu) fail("case " + case_to_string(params.family) + " does not take mu");
    if (needs_rho && !params.rho) fail("case " + case_to_string(params.family) + " requires rho");
    if (!needs_rho && params.rho)
        fail("case " + case_to_string(params.family) + " does not take rho");

    if (needs_mu && params.mu && *params.mu <= -1) {
        fail("mu must satisfy mu > -1, got " + rat_to_string(*params.mu));
    }
    if (params.family == Case::B2 && params.rho && *params.rho <= 0) {
        fail("rho must satisfy rho > 0 for case B2, got " + rat_to_string(*params.rho));
    }
    if (params.family == Case::C && params.rho && *params.rho < 0) {
        fail("rho must satisfy rho >= 0 for case C, got " + rat_to_string(*params.rho));
    }

    if (report.ok) {
        // theta_1 = (mu+2)/(mu+1) when mu is present, else 1; likewise theta_2 with rho.
        Rat theta1 = params.mu ? (*params.mu + 2) / (*params.mu + 1) : Rat(1);
        Rat theta2 = params.rho ? (*params.rho + 2) / (*params.rho + 1) : Rat(1);
        if (theta_degenerate(theta1)) {
            fail("theta_1 = " + rat_to_string(theta1) + " lies in the degenerate set {(n-1)/n}");
        }
        if (theta_degenerate(theta2)) {
            fail("theta_2 = " + rat_to_string(theta2) + " lies in the degenerate set {(n-1)/n}");
        }
    }
    return report;
}

void require_valid(const FamilyParams& params) {
    ValidationReport report = validate_params(params);
    if (report.ok) return;
    std::ostringstream msg;
    msg << "invalid parameters for case " << case_to_string(params.family) << ":";
    for (const auto& v : report.violations) msg << "\n  - " << v;
    throw ParameterDomainError(msg.str());
}

}  // namespace starpoly
