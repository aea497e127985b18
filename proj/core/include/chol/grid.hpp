#pragma once

#include <memory>
#include <vector>

#include "chol/scenario.hpp"

namespace chol {

/// The Lagrangian coordinate xi(x) = int_0^x (1 + u0'^2), sampled on N_xi
/// uniform nodes covering the image of [-D, D], together with the inverse
/// map ybar and its derivative.
struct XiGrid {
    std::vector<double> xi;          // uniform, endpoint-inclusive
    std::vector<double> ybar;        // strictly increasing positions ybar(xi_i)
    std::vector<double> dybar_dxi;   // 1 / (1 + u0'^2(ybar)), in (0, 1]
    double delta_xi = 0.0;

    std::size_t size() const { return xi.size(); }
};

/// Evolving solver state on a fixed xi grid at one time: the triple
/// (u, v, q) of the coordinate system, the positions y, and the per-node
/// breaking time (+inf sentinel while unbroken).
struct LagrangianState {
    double t = 0.0;
    std::shared_ptr<const XiGrid> grid;
    std::vector<double> u;     // u(t, y(t,xi_i))
    std::vector<double> v;     // 2 atan(u_x), reaches -pi at breaking
    std::vector<double> q;     // weighted Jacobian, positive
    std::vector<double> y;     // characteristic positions, nondecreasing
    std::vector<double> t_br;  // breaking times, +inf while unbroken

    std::size_t size() const { return u.size(); }
    bool active(std::size_t i) const;  // v_i > -pi and not pinned
};

constexpr double kNotBroken = std::numeric_limits<double>::infinity();

/// Build the xi grid for a scenario by cumulative trapezoid quadrature of
/// 1 + u0'^2 on a fine x grid (8x oversampled) and monotone piecewise-linear
/// inversion.
XiGrid build_xi_grid(const Scenario& scenario);

/// Initial state: u = u0(ybar), v = 2 atan(u0'(ybar)), q = 1, y = ybar.
LagrangianState initial_state(std::shared_ptr<const XiGrid> grid, const InitialDatum& datum);

}  // namespace chol
