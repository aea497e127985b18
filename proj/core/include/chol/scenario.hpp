#pragma once

#include <string>
#include <vector>

#include "chol/datum.hpp"

namespace chol {

/// A fully specified run: initial datum, truncated domain, grid sizes,
/// horizon, and the derived constants C, L, T_max.
///
/// C is the initial energy integral of u0^2 + u0x^2/2 over [-D, D]; by the
/// weak energy condition it bounds the energy for all later times. T_max is
/// the guaranteed-smooth horizon pi / (8 sqrt(L C)); runs may continue past
/// it. L is the kernel Lipschitz constant, fixed to 1.
struct Scenario {
    InitialDatum datum;
    double D = 20.0;    // domain half-width, solution treated as 0 outside
    int N_xi = 1024;    // Lagrangian grid size
    int N_x = 1024;     // reconstruction grid size
    double T = 1.0;     // run horizon
    double C = 0.0;     // initial energy constant (computed)
    double L = 1.0;     // kernel Lipschitz constant
    double T_max = 0.0; // pi/(8 sqrt(L C)); +inf when C == 0 (computed)
    double dt_safety = 0.1;  // step-size factor in (0,1)
};

/// Trapezoid quadrature of u0^2 + u0x^2/2 over [-D, D] with n intervals.
double energy_quadrature(const InitialDatum& datum, double D, int n);

/// Build a scenario, computing C and T_max from the datum.
/// Throws InvalidDatumError for non-finite energy, SolverError for bad
/// parameters (D <= 0, grids < 16, T < 0). A horizon beyond T_max is
/// permitted; T_max only bounds the certified-smooth interval.
Scenario make_scenario(const InitialDatum& datum, double D, int N_xi, int N_x, double T,
                       double dt_safety = 0.1);

struct CatalogEntry {
    std::string name;
    Scenario scenario;
};

/// The named scenarios exercised by the validation and acceptance suites.
std::vector<CatalogEntry> catalog(int N_xi = 1024, int N_x = 2048);

}  // namespace chol
