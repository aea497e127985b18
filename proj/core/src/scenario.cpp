#include "chol/scenario.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "chol/errors.hpp"

namespace chol {

double energy_quadrature(const InitialDatum& datum, double D, int n) {
    const double h = 2.0 * D / n;
    auto density = [&](double x) {
        const DatumValue v = eval_datum(datum, x);
        return v.u * v.u + 0.5 * v.ux * v.ux;
    };
    double sum = 0.5 * (density(-D) + density(D));
    for (int k = 1; k < n; ++k) sum += density(-D + k * h);
    return sum * h;
}

Scenario make_scenario(const InitialDatum& datum, double D, int N_xi, int N_x, double T,
                       double dt_safety) {
    if (D <= 0.0) throw SolverError("make_scenario: D must be positive");
    if (N_xi < 16 || N_x < 16) throw SolverError("make_scenario: grids must be >= 16");
    if (T < 0.0) throw SolverError("make_scenario: T must be nonnegative");
    if (!(dt_safety > 0.0 && dt_safety < 1.0))
        throw SolverError("make_scenario: dt_safety must lie in (0,1)");

    Scenario s;
    s.datum = datum;
    s.D = D;
    s.N_xi = N_xi;
    s.N_x = N_x;
    s.T = T;
    s.dt_safety = dt_safety;
    s.L = 1.0;
    s.C = energy_quadrature(datum, D, 8 * N_x);
    if (!std::isfinite(s.C)) throw InvalidDatumError("make_scenario: non-finite initial energy");
    s.T_max = s.C > 0.0 ? std::numbers::pi / (8.0 * std::sqrt(s.L * s.C))
                        : std::numeric_limits<double>::infinity();
    return s;
}

std::vector<CatalogEntry> catalog(int N_xi, int N_x) {
    std::vector<CatalogEntry> out;
    out.push_back({"peakon", make_scenario(PeakonDatum{1.0}, 20.0, N_xi, N_x, 1.0)});
    out.push_back(
        {"antipeakon_pair", make_scenario(AntipeakonPairDatum{1.0, 1.0}, 20.0, N_xi, N_x, 3.0)});
    out.push_back({"smooth_bump", make_scenario(SmoothBumpDatum{1.0, 2.0}, 20.0, N_xi, N_x, 2.0)});
    out.push_back({"multipeakon",
                   make_scenario(MultipeakonDatum{{{1.0, -6.0}, {0.5, 0.0}}}, 20.0, N_xi, N_x, 2.0)});
    return out;
}

}  // namespace chol
