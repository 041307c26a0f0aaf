#pragma once

#include <cstddef>
#include <span>
#include <string>

namespace collatz {

struct DataPoint {
    double x = 0;
    double y = 0;
};

// Least-squares line fit plus a five-number summary of its residuals.
// Quartiles use linear interpolation between order statistics (the common
// statistical-software default).
struct RegressionFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
    double residual_min = 0;
    double residual_q1 = 0;
    double residual_median = 0;
    double residual_q3 = 0;
    double residual_max = 0;
    std::size_t n_points = 0;
};

// Ordinary least squares. Requires at least two points with non-constant x;
// otherwise throws std::invalid_argument. A perfectly constant y (zero total
// sum of squares) reports r_squared == 1.
RegressionFit fit_ols(std::span<const DataPoint> points);

double predict(const RegressionFit& fit, double x);

std::string to_text(const RegressionFit& fit);
std::string to_json(const RegressionFit& fit);

}  // namespace collatz
