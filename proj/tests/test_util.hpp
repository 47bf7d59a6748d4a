/**
 * @file test_util.hpp
 * @brief Shared helpers for the unit tests: parameter grids, fixture loading
 *        and relative-error comparison.
 */
#ifndef STARPOLY_TEST_UTIL_HPP
#define STARPOLY_TEST_UTIL_HPP

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "starpoly/family.hpp"

namespace testutil {

using starpoly::Case;
using starpoly::FamilyParams;
using starpoly::Rat;

inline FamilyParams pA() { return starpoly::make_params(Case::A); }
inline FamilyParams pB1(const Rat& mu) { return starpoly::make_params(Case::B1, mu); }
inline FamilyParams pB2(const Rat& rho) {
    return starpoly::make_params(Case::B2, std::nullopt, rho);
}
inline FamilyParams pC(const Rat& mu, const Rat& rho) {
    return starpoly::make_params(Case::C, mu, rho);
}

/// Representative parameter points covering every family, used by most suites.
inline std::vector<FamilyParams> parameter_grid() {
    std::vector<FamilyParams> grid;
    grid.push_back(pA());
    for (const Rat& mu : {Rat(-1, 2), Rat(0), Rat(1), Rat(2), Rat(7, 3)}) grid.push_back(pB1(mu));
    for (const Rat& rho : {Rat(1, 2), Rat(1), Rat(3)}) grid.push_back(pB2(rho));
    grid.push_back(pC(1, Rat(3, 2)));
    grid.push_back(pC(Rat(-1, 2), Rat(1, 10)));
    grid.push_back(pC(2, 3));
    // Non-default gamma1 exercises the rescaling equivalence everywhere.
    grid.push_back(starpoly::make_params(Case::A, std::nullopt, std::nullopt, Rat(9, 2)));
    grid.push_back(starpoly::make_params(Case::C, Rat(2), Rat(3), Rat(1)));
    return grid;
}

inline std::string param_label(const FamilyParams& p) {
    std::string s = starpoly::case_to_string(p.family);
    if (p.mu) s += " mu=" + starpoly::rat_to_string(*p.mu);
    if (p.rho) s += " rho=" + starpoly::rat_to_string(*p.rho);
    s += " gamma1=" + starpoly::rat_to_string(p.gamma1);
    return s;
}

inline nlohmann::json load_fixture(const std::string& name) {
    std::string path = std::string(STARPOLY_FIXTURE_DIR) + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

inline double rel_err(double got, double want) {
    double scale = std::fmax(std::fabs(want), 1e-300);
    return std::fabs(got - want) / scale;
}

}  // namespace testutil

#endif  // STARPOLY_TEST_UTIL_HPP
