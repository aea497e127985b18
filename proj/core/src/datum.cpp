#include "chol/datum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chol/errors.hpp"

namespace chol {
namespace {

double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

// One peakon term c*exp(-|x - x0|); derivative contribution is 0 exactly at
// the peak (mean of the one-sided slopes -c and +c).
DatumValue peak_term(double c, double x0, double x) {
    const double r = x - x0;
    const double e = std::exp(-std::abs(r));
    return {c * e, r == 0.0 ? 0.0 : -c * sgn(r) * e};
}

DatumValue eval(const PeakonDatum& d, double x) { return peak_term(d.c, 0.0, x); }

DatumValue eval(const AntipeakonPairDatum& d, double x) {
    const DatumValue left = peak_term(d.c, -d.a, x);
    const DatumValue right = peak_term(-d.c, d.a, x);
    return {left.u + right.u, left.ux + right.ux};
}

DatumValue eval(const SmoothBumpDatum& d, double x) {
    const double s = x / d.width;
    const double u = d.amplitude * std::exp(-s * s);
    return {u, -2.0 * x / (d.width * d.width) * u};
}

DatumValue eval(const MultipeakonDatum& d, double x) {
    DatumValue out{0.0, 0.0};
    for (const auto& [c, x0] : d.peaks) {
        const DatumValue t = peak_term(c, x0, x);
        out.u += t.u;
        out.ux += t.ux;
    }
    return out;
}

DatumValue eval(const SampledDatum& d, double x) {
    if (d.x.size() < 2 || d.x.size() != d.u.size())
        throw InvalidDatumError("sampled datum needs at least two matching samples");
    if (x < d.x.front() || x > d.x.back())
        throw OutOfRangeError("sampled datum queried at x=" + std::to_string(x) +
                              " outside [" + std::to_string(d.x.front()) + ", " +
                              std::to_string(d.x.back()) + "]");
    const auto it = std::upper_bound(d.x.begin(), d.x.end(), x);
    const std::size_t hi = std::min<std::size_t>(
        d.x.size() - 1, static_cast<std::size_t>(std::distance(d.x.begin(), it)));
    const std::size_t lo = hi - 1;
    const double slope = (d.u[hi] - d.u[lo]) / (d.x[hi] - d.x[lo]);
    const double u = d.u[lo] + slope * (x - d.x[lo]);
    // At an interior sample point the derivative is the mean of the
    // neighbouring segment slopes.
    if (x == d.x[lo] && lo > 0) {
        const double prev = (d.u[lo] - d.u[lo - 1]) / (d.x[lo] - d.x[lo - 1]);
        return {d.u[lo], 0.5 * (prev + slope)};
    }
    if (x == d.x[hi] && hi + 1 < d.x.size()) {
        const double next = (d.u[hi + 1] - d.u[hi]) / (d.x[hi + 1] - d.x[hi]);
        return {d.u[hi], 0.5 * (slope + next)};
    }
    return {u, slope};
}

}  // namespace

DatumValue eval_datum(const InitialDatum& datum, double x) {
    if (!std::isfinite(x)) throw OutOfRangeError("eval_datum: non-finite x");
    return std::visit([x](const auto& d) { return eval(d, x); }, datum);
}

}  // namespace chol
