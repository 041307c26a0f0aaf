#include "collatz/regress.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace collatz {

namespace {

// Linear interpolation between order statistics: h = (n-1)p selects the
// sample, fractional h blends with the next one.
double quantile(const std::vector<double>& sorted, double p) {
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size())
        return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::string formatted(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

}  // namespace

RegressionFit fit_ols(std::span<const DataPoint> points) {
    const std::size_t n = points.size();
    if (n < 2)
        throw std::invalid_argument("fit_ols: need at least 2 points, got " +
                                    std::to_string(n));

    double mean_x = 0, mean_y = 0;
    for (const DataPoint& p : points) {
        mean_x += p.x;
        mean_y += p.y;
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0, sxy = 0;
    for (const DataPoint& p : points) {
        sxx += (p.x - mean_x) * (p.x - mean_x);
        sxy += (p.x - mean_x) * (p.y - mean_y);
    }
    if (sxx == 0)
        throw std::invalid_argument("fit_ols: x values are all identical");

    RegressionFit fit;
    fit.n_points = n;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;

    std::vector<double> residuals;
    residuals.reserve(n);
    double ss_res = 0, ss_tot = 0;
    for (const DataPoint& p : points) {
        const double r = p.y - (fit.slope * p.x + fit.intercept);
        residuals.push_back(r);
        ss_res += r * r;
        ss_tot += (p.y - mean_y) * (p.y - mean_y);
    }
    fit.r_squared = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;

    std::sort(residuals.begin(), residuals.end());
    fit.residual_min = residuals.front();
    fit.residual_q1 = quantile(residuals, 0.25);
    fit.residual_median = quantile(residuals, 0.50);
    fit.residual_q3 = quantile(residuals, 0.75);
    fit.residual_max = residuals.back();
    return fit;
}

double predict(const RegressionFit& fit, double x) {
    return fit.slope * x + fit.intercept;
}

std::string to_text(const RegressionFit& fit) {
    std::string out;
    out += "n_points         " + std::to_string(fit.n_points) + "\n";
    out += "slope            " + formatted(fit.slope) + "\n";
    out += "intercept        " + formatted(fit.intercept) + "\n";
    out += "r_squared        " + formatted(fit.r_squared) + "\n";
    out += "residual_min     " + formatted(fit.residual_min) + "\n";
    out += "residual_q1      " + formatted(fit.residual_q1) + "\n";
    out += "residual_median  " + formatted(fit.residual_median) + "\n";
    out += "residual_q3      " + formatted(fit.residual_q3) + "\n";
    out += "residual_max     " + formatted(fit.residual_max) + "\n";
    return out;
}

std::string to_json(const RegressionFit& fit) {
    nlohmann::ordered_json j{
        {"n_points", fit.n_points},
        {"slope", fit.slope},
        {"intercept", fit.intercept},
        {"r_squared", fit.r_squared},
        {"residuals",
         {{"min", fit.residual_min},
          {"q1", fit.residual_q1},
          {"median", fit.residual_median},
          {"q3", fit.residual_q3},
          {"max", fit.residual_max}}},
    };
    return j.dump(2);
}

}  // namespace collatz
