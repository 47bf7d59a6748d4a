/**
 * @file starpoly_cli.cpp
 * @brief Command-line surface: tables, verification suites and plot-ready data
 *        for the threefold-symmetric 2-orthogonal families.
 *
 * Subcommands: gamma | poly | moments | zeros | weights | verify | ode.
 * All rational inputs ("3/2") are parsed exactly; all rational outputs are
 * "p/q" strings; all floating-point outputs use 17 significant digits, so a
 * given invocation is byte-deterministic.
 */
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "starpoly/moments.hpp"
#include "starpoly/ode.hpp"
#include "starpoly/polynomials.hpp"
#include "starpoly/weights.hpp"
#include "starpoly/zeros.hpp"

namespace {

using nlohmann::json;
using namespace starpoly;

constexpr long kMaxDegree = 500;

struct CommonFlags {
    std::string case_name = "A";
    std::optional<std::string> mu, rho, gamma1;
    std::string format = "json";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--case", f.case_name, "Family: A, B1, B2 or C")
        ->check(CLI::IsMember({"A", "B1", "B2", "C"}));
    cmd->add_option("--mu", f.mu, "Parameter mu as an exact rational p/q");
    cmd->add_option("--rho", f.rho, "Parameter rho as an exact rational p/q");
    cmd->add_option("--gamma1", f.gamma1, "First recurrence coefficient as p/q");
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", f.out_path, "Write output to PATH instead of stdout");
}

FamilyParams params_from(const CommonFlags& f) {
    auto opt_rat = [](const std::optional<std::string>& s) -> std::optional<Rat> {
        if (!s) return std::nullopt;
        return parse_rational(*s);
    };
    FamilyParams p = make_params(case_from_string(f.case_name), opt_rat(f.mu), opt_rat(f.rho),
                                 opt_rat(f.gamma1));
    require_valid(p);
    return p;
}

void emit(const CommonFlags& f, const std::string& text) {
    if (f.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(f.out_path, std::ios::binary);
    if (!out) throw DomainError("cannot open output file: " + f.out_path);
    out << text;
}

json params_json(const FamilyParams& p) {
    json j;
    j["case"] = case_to_string(p.family);
    j["gamma1"] = rat_to_string(p.gamma1);
    j["mu"] = p.mu ? json(rat_to_string(*p.mu)) : json(nullptr);
    j["rho"] = p.rho ? json(rat_to_string(*p.rho)) : json(nullptr);
    return j;
}

// ---------------------------------------------------------------- gamma ----

int cmd_gamma(const CommonFlags& f, long n) {
    FamilyParams p = params_from(f);
    if (f.format == "csv") {
        std::string s = "n,theta,gamma,gamma_tilde,theta_approx,gamma_approx,gamma_tilde_approx\n";
        for (long k = 1; k <= n; ++k) {
            Rat t = theta(p, k), g = gamma(p, k), gt = gamma_tilde(p, k);
            s += std::to_string(k) + "," + rat_to_string(t) + "," + rat_to_string(g) + "," +
                 rat_to_string(gt) + "," + format_double(rat_to_double(t)) + "," +
                 format_double(rat_to_double(g)) + "," + format_double(rat_to_double(gt)) + "\n";
        }
        emit(f, s);
        return 0;
    }
    json j = params_json(p);
    j["rows"] = json::array();
    for (long k = 1; k <= n; ++k) {
        Rat t = theta(p, k), g = gamma(p, k), gt = gamma_tilde(p, k);
        json row;
        row["n"] = k;
        row["theta"] = rat_to_string(t);
        row["gamma"] = rat_to_string(g);
        row["gamma_tilde"] = rat_to_string(gt);
        row["theta_approx"] = format_double(rat_to_double(t));
        row["gamma_approx"] = format_double(rat_to_double(g));
        row["gamma_tilde_approx"] = format_double(rat_to_double(gt));
        j["rows"].push_back(row);
    }
    emit(f, j.dump(2) + "\n");
    return 0;
}

// ----------------------------------------------------------------- poly ----

int cmd_poly(const CommonFlags& f, long degree) {
    FamilyParams p = params_from(f);
    std::vector<SymmetricPolynomial> P = generate(p, degree);
    const SymmetricPolynomial& poly = P[static_cast<std::size_t>(degree)];
    if (f.format == "csv") {
        std::string s = "k,coeff\n";
        for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
            if (poly.coeffs[i] == 0) continue;
            s += std::to_string(poly.residue + 3 * static_cast<long>(i)) + "," +
                 rat_to_string(poly.coeffs[i]) + "\n";
        }
        emit(f, s);
        return 0;
    }
    json j;
    j["degree"] = degree;
    j["coeffs"] = json::array();
    for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
        if (poly.coeffs[i] == 0) continue;
        j["coeffs"].push_back(json::array(
            {std::to_string(poly.residue + 3 * static_cast<long>(i)),
             rat_to_string(poly.coeffs[i])}));
    }
    emit(f, j.dump(2) + "\n");
    return 0;
}

// -------------------------------------------------------------- moments ----

int cmd_moments(const CommonFlags& f, long n) {
    FamilyParams p = params_from(f);
    MomentTable table = moments(p, n + 1);
    if (f.format == "csv") {
        std::string s = "n,u0_3n,u1_3n_plus_1,u0_approx,u1_approx\n";
        for (long k = 0; k <= n; ++k) {
            const Rat& m0 = table.u0[static_cast<std::size_t>(k)];
            const Rat& m1 = table.u1[static_cast<std::size_t>(k)];
            s += std::to_string(k) + "," + rat_to_string(m0) + "," + rat_to_string(m1) + "," +
                 format_double(rat_to_double(m0)) + "," + format_double(rat_to_double(m1)) + "\n";
        }
        emit(f, s);
        return 0;
    }
    json j = params_json(p);
    j["rows"] = json::array();
    for (long k = 0; k <= n; ++k) {
        const Rat& m0 = table.u0[static_cast<std::size_t>(k)];
        const Rat& m1 = table.u1[static_cast<std::size_t>(k)];
        json row;
        row["n"] = k;
        row["u0_3n"] = rat_to_string(m0);
        row["u1_3n_plus_1"] = rat_to_string(m1);
        row["u0_approx"] = format_double(rat_to_double(m0));
        row["u1_approx"] = format_double(rat_to_double(m1));
        j["rows"].push_back(row);
    }
    emit(f, j.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------- zeros ----

int cmd_zeros(const CommonFlags& f, long degree, bool star) {
    FamilyParams p = params_from(f);
    ZeroSet zs = positive_zeros(p, degree);
    if (f.format == "csv") {
        std::string s = "k,positive_root\n";
        for (std::size_t i = 0; i < zs.positive_roots.size(); ++i)
            s += std::to_string(i + 1) + "," + format_double(zs.positive_roots[i]) + "\n";
        emit(f, s);
        return 0;
    }
    json j = params_json(p);
    j["degree"] = zs.degree;
    j["origin_multiplicity"] = zs.origin_multiplicity;
    j["positive_roots"] = json::array();
    for (double r : zs.positive_roots) j["positive_roots"].push_back(format_double(r));
    if (star) {
        j["star_points"] = json::array();
        for (const auto& z : zs.star_points)
            j["star_points"].push_back(
                json::array({format_double(z.real()), format_double(z.imag())}));
    }
    emit(f, j.dump(2) + "\n");
    return 0;
}

// -------------------------------------------------------------- weights ----

int cmd_weights(const CommonFlags& f, double xmin, double xmax, long samples) {
    FamilyParams p = params_from(f);
    double upper = support_upper(p);
    if (xmax <= 0) xmax = std::isfinite(upper) ? 0.99 * upper : 3.0;
    if (xmin <= 0 || xmin >= xmax)
        throw EvaluationDomainError("need 0 < xmin < xmax inside the support");
    if (samples < 2) throw EvaluationDomainError("need at least 2 samples");
    auto grid_at = [&](long i) {
        return xmin + (xmax - xmin) * static_cast<double>(i) / static_cast<double>(samples - 1);
    };
    if (f.format == "csv") {
        std::string s = "x,U0,U1\n";
        for (long i = 0; i < samples; ++i) {
            double x = grid_at(i);
            s += format_double(x) + "," + format_double(weight(p, 0, x)) + "," +
                 format_double(weight(p, 1, x)) + "\n";
        }
        emit(f, s);
        return 0;
    }
    json j = params_json(p);
    j["samples"] = json::array();
    for (long i = 0; i < samples; ++i) {
        double x = grid_at(i);
        json row;
        row["x"] = format_double(x);
        row["u0"] = format_double(weight(p, 0, x));
        row["u1"] = format_double(weight(p, 1, x));
        j["samples"].push_back(row);
    }
    emit(f, j.dump(2) + "\n");
    return 0;
}

// ------------------------------------------------------------------ ode ----

int cmd_ode(const CommonFlags& f, long n) {
    FamilyParams p = params_from(f);
    OdeCoefficients kp = ode_coefficients(p, n);
    OdeCoefficients kq = q_ode_coefficients(p, n);
    auto tuple_json = [](const OdeCoefficients& k) {
        json j;
        j["a"] = rat_to_string(k.a);
        j["b"] = rat_to_string(k.b);
        j["c"] = rat_to_string(k.c);
        j["d"] = rat_to_string(k.d);
        j["e"] = rat_to_string(k.e);
        return j;
    };
    if (f.format == "csv") {
        auto row = [](const char* which, const OdeCoefficients& k) {
            return std::string(which) + "," + rat_to_string(k.a) + "," + rat_to_string(k.b) + "," +
                   rat_to_string(k.c) + "," + rat_to_string(k.d) + "," + rat_to_string(k.e) + "\n";
        };
        emit(f, "equation,a,b,c,d,e\n" + row("P", kp) + row("Q", kq));
        return 0;
    }
    json j = params_json(p);
    j["n"] = n;
    j["p_equation"] = tuple_json(kp);
    j["q_equation"] = tuple_json(kq);
    emit(f, j.dump(2) + "\n");
    return 0;
}

// --------------------------------------------------------------- verify ----

int cmd_verify(const CommonFlags& f, const std::string& suite, long n, double tol) {
    FamilyParams p = params_from(f);
    json report = params_json(p);
    report["suites"] = json::array();
    bool all_pass = true;
    auto run = [&](const std::string& name, auto&& body) {
        if (suite != "all" && suite != name) return;
        json entry;
        entry["name"] = name;
        try {
            body(entry);
        } catch (const std::exception& e) {
            entry["pass"] = false;
            entry["error"] = e.what();
        }
        if (!entry.contains("pass")) entry["pass"] = false;
        if (!entry["pass"].get<bool>()) all_pass = false;
        report["suites"].push_back(entry);
    };

    run("riccati", [&](json& e) { e["pass"] = check_riccati(p, std::max(n, 200L)); });

    run("orthogonality", [&](json& e) {
        std::vector<SymmetricPolynomial> P = generate(p, n);
        e["pass"] = verify_orthogonality(p, P, n);
    });

    run("hahn", [&](json& e) {
        std::vector<SymmetricPolynomial> P = generate(p, n + 3);
        std::vector<SymmetricPolynomial> Q = derivative_sequence(P, p);  // throws on failure
        bool ok = true;
        for (long k = 0; k + 3 <= n; ++k) ok = ok && check_structure_relation(P, Q, p, k);
        e["pass"] = ok;
    });

    run("ode", [&](json& e) {
        std::vector<SymmetricPolynomial> P = generate(p, n + 1);
        std::vector<SymmetricPolynomial> Q = derivative_sequence(P, p);
        bool ok = true;
        for (long k = 1; k <= n; ++k) {
            ok = ok && check_ode(p, P[static_cast<std::size_t>(k)], k);
            ok = ok && check_q_ode(p, Q[static_cast<std::size_t>(k)], k);
        }
        e["pass"] = ok;
    });

    run("derivative", [&](json& e) {
        // Q of this family equals P of the derivative family (A is Appell).
        FamilyParams d;
        switch (p.family) {
            case Case::A: d = p; break;
            case Case::B1: d = make_params(Case::B2, std::nullopt, *p.mu + 2); break;
            case Case::B2: d = make_params(Case::B1, *p.rho + 1, std::nullopt); break;
            case Case::C: d = make_params(Case::C, *p.rho + 1, *p.mu + 2); break;
        }
        d.gamma1 = gamma_tilde(p, 1);
        std::vector<SymmetricPolynomial> P = generate(p, n + 1);
        std::vector<SymmetricPolynomial> Q = derivative_sequence(P, p);
        std::vector<SymmetricPolynomial> D = generate(d, n);
        bool ok = true;
        for (long k = 0; k <= n; ++k)
            ok = ok && (Q[static_cast<std::size_t>(k)] == D[static_cast<std::size_t>(k)]);
        e["pass"] = ok;
    });

    run("interlacing", [&](json& e) {
        long m = std::max(1L, n / 3);
        e["pass"] = check_interlacing(p, m, tol > 0 ? tol : 1e-10);
    });

    run("bound", [&](json& e) {
        ZeroSet zs = positive_zeros(p, n);
        double b = largest_zero_bound(p, n);
        double largest = zs.positive_roots.empty() ? 0.0 : zs.positive_roots.back();
        e["largest_zero"] = format_double(largest);
        e["bound"] = format_double(b);
        e["pass"] = largest <= 1.05 * b;
    });

    run("quadrature", [&](json& e) {
        double qtol = tol > 0 ? tol : 1e-8;
        bool ok = true;
        double worst = 0;
        for (long k = 0; k <= std::min(n, 3L); ++k) {
            for (int which = 0; which < 2; ++which) {
                double exact = rat_to_double(which == 0 ? closed_moment_u0(p, k)
                                                        : closed_moment_u1(p, k));
                double numeric = quadrature_moment(p, which, k);
                double rel = std::fabs(numeric - exact) / std::fabs(exact);
                worst = std::max(worst, rel);
                ok = ok && rel <= qtol;
            }
        }
        e["max_rel_error"] = format_double(worst);
        e["pass"] = ok;
    });

    report["pass"] = all_pass;
    emit(f, report.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    // STARPOLY_THREADS caps worker parallelism; all current code paths are
    // sequential, so any positive cap is honored trivially.
    if (const char* env = std::getenv("STARPOLY_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end == env || cap < 1) {
            std::cerr << "warning: ignoring invalid STARPOLY_THREADS='" << env << "'\n";
        }
    }

    CLI::App app{"Threefold-symmetric Hahn-classical 2-orthogonal polynomial toolkit"};
    app.require_subcommand(1);

    CommonFlags f;
    long n = 10, degree = 10, samples = 25;
    double xmin = 0.1, xmax = -1, tol = -1;
    bool star = false;
    std::string suite = "all";

    auto* c_gamma = app.add_subcommand("gamma", "Recurrence coefficient table");
    add_common(c_gamma, f);
    c_gamma->add_option("--n", n, "Number of rows")->check(CLI::Range(1L, kMaxDegree));

    auto* c_poly = app.add_subcommand("poly", "Exact coefficients of P_degree");
    add_common(c_poly, f);
    c_poly->add_option("--degree,--n", degree, "Degree")->check(CLI::Range(0L, kMaxDegree));

    auto* c_moments = app.add_subcommand("moments", "Exact moment table of (u0, u1)");
    add_common(c_moments, f);
    c_moments->add_option("--n", n, "Largest moment index n")->check(CLI::Range(0L, kMaxDegree));

    auto* c_zeros = app.add_subcommand("zeros", "Zeros of P_degree on the star");
    add_common(c_zeros, f);
    c_zeros->add_option("--degree,--n", degree, "Degree")->check(CLI::Range(1L, kMaxDegree));
    c_zeros->add_flag("--star", star, "Include rotated complex star points (JSON)");

    auto* c_weights = app.add_subcommand("weights", "Sampled weight functions U0, U1");
    add_common(c_weights, f);
    c_weights->add_option("--xmin", xmin, "Left end of the sampling grid");
    c_weights->add_option("--xmax", xmax, "Right end of the sampling grid");
    c_weights->add_option("--samples", samples, "Number of grid points")
        ->check(CLI::Range(2L, 100000L));

    auto* c_ode = app.add_subcommand("ode", "Third-order ODE coefficients for P_n and Q_n");
    add_common(c_ode, f);
    c_ode->add_option("--n,--degree", n, "Degree n >= 1")->check(CLI::Range(1L, kMaxDegree));

    auto* c_verify = app.add_subcommand("verify", "Run verification suites");
    add_common(c_verify, f);
    c_verify->add_option("--suite", suite, "Suite name or 'all'")
        ->check(CLI::IsMember({"all", "riccati", "orthogonality", "hahn", "ode", "derivative",
                               "interlacing", "bound", "quadrature"}));
    c_verify->add_option("--n", n, "Depth of the checks")->check(CLI::Range(1L, kMaxDegree));
    c_verify->add_option("--tol", tol, "Tolerance override for numeric suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_gamma->parsed()) return cmd_gamma(f, n);
        if (c_poly->parsed()) return cmd_poly(f, degree);
        if (c_moments->parsed()) return cmd_moments(f, n);
        if (c_zeros->parsed()) return cmd_zeros(f, degree, star);
        if (c_weights->parsed()) return cmd_weights(f, xmin, xmax, samples);
        if (c_ode->parsed()) return cmd_ode(f, n);
        if (c_verify->parsed()) return cmd_verify(f, suite, n, tol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
