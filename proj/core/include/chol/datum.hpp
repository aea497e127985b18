#pragma once

#include <utility>
#include <variant>
#include <vector>

namespace chol {

// Catalog of initial data u0 for the Cauchy problem. All entries are
// dimensionless and have finite H1 norm on any truncated domain.

/// Single peaked soliton u0(x) = c * exp(-|x|).
struct PeakonDatum {
    double c = 1.0;
};

/// Peakon at -a with amplitude +c plus antipeakon at +a with amplitude -c.
/// Odd in x; the pair collides at the origin and breaks there.
struct AntipeakonPairDatum {
    double a = 1.0;
    double c = 1.0;
};

/// Gaussian bump u0(x) = amplitude * exp(-(x/width)^2).
struct SmoothBumpDatum {
    double amplitude = 1.0;
    double width = 1.0;
};

/// Sum of peakons: u0(x) = sum_i c_i * exp(-|x - x_i|).
struct MultipeakonDatum {
    std::vector<std::pair<double, double>> peaks;  // (c_i, x_i)
};

/// Piecewise-linear datum given by samples; queries outside the grid throw.
struct SampledDatum {
    std::vector<double> x;
    std::vector<double> u;
};

using InitialDatum =
    std::variant<PeakonDatum, AntipeakonPairDatum, SmoothBumpDatum, MultipeakonDatum, SampledDatum>;

struct DatumValue {
    double u;
    double ux;
};

/// Evaluate u0 and u0' at x. At a non-differentiable peak the stored
/// derivative is the mean of the one-sided limits.
DatumValue eval_datum(const InitialDatum& datum, double x);

}  // namespace chol
