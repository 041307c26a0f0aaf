#include "collatz/regress.hpp"

#include <json.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

using namespace collatz;

namespace {

std::vector<DataPoint> zip(const std::vector<double>& xs,
                           const std::vector<double>& ys) {
    std::vector<DataPoint> out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out.push_back({xs[i], ys[i]});
    return out;
}

constexpr double eps = 1e-9;

}  // namespace

TEST_CASE("pinned five-point fit with interpolated quartiles") {
    const auto fit = fit_ols(zip({1, 2, 3, 4, 5}, {1, 2, 4, 8, 16}));
    CHECK(fit.n_points == 5);
    CHECK(fit.slope == doctest::Approx(3.6).epsilon(eps));
    CHECK(fit.intercept == doctest::Approx(-4.6).epsilon(eps));
    CHECK(fit.r_squared == doctest::Approx(0.87096774193548387).epsilon(eps));
    // Sorted residuals: -2.2, -1.8, -0.6, 2.0, 2.6.
    CHECK(fit.residual_min == doctest::Approx(-2.2).epsilon(eps));
    CHECK(fit.residual_q1 == doctest::Approx(-1.8).epsilon(eps));
    CHECK(fit.residual_median == doctest::Approx(-0.6).epsilon(eps));
    CHECK(fit.residual_q3 == doctest::Approx(2.0).epsilon(eps));
    CHECK(fit.residual_max == doctest::Approx(2.6).epsilon(eps));
}

TEST_CASE("pinned four-point fit interpolates between order statistics") {
    const auto fit = fit_ols(zip({1, 2, 3, 4}, {2, 1, 4, 3}));
    CHECK(fit.slope == doctest::Approx(0.6).epsilon(eps));
    CHECK(fit.intercept == doctest::Approx(1.0).epsilon(eps));
    CHECK(fit.r_squared == doctest::Approx(0.36).epsilon(eps));
    // Sorted residuals: -1.2, -0.4, 0.4, 1.2; quartile positions fall
    // between samples, so the summary blends neighbours.
    CHECK(fit.residual_q1 == doctest::Approx(-0.6).epsilon(eps));
    CHECK(fit.residual_median == doctest::Approx(0.0).epsilon(eps));
    CHECK(fit.residual_q3 == doctest::Approx(0.6).epsilon(eps));
}

TEST_CASE("collinear points fit exactly") {
    std::vector<DataPoint> pts;
    for (int x = 1; x <= 10; ++x)
        pts.push_back({static_cast<double>(x), 2.0 * x + 1.0});
    const auto fit = fit_ols(pts);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(eps));
    CHECK(fit.intercept == doctest::Approx(1.0).epsilon(eps));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(eps));
    CHECK(std::abs(fit.residual_min) < 1e-12);
    CHECK(std::abs(fit.residual_max) < 1e-12);
}

TEST_CASE("constant response reports a perfect fit") {
    const auto fit = fit_ols(zip({1, 2, 3, 4}, {5, 5, 5, 5}));
    CHECK(fit.slope == doctest::Approx(0.0).epsilon(eps));
    CHECK(fit.intercept == doctest::Approx(5.0).epsilon(eps));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(eps));
}

TEST_CASE("two points determine the line") {
    const auto fit = fit_ols(zip({1, 2}, {0, 1}));
    CHECK(fit.slope == doctest::Approx(1.0).epsilon(eps));
    CHECK(fit.intercept == doctest::Approx(-1.0).epsilon(eps));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(eps));
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(fit_ols({}), std::invalid_argument);
    CHECK_THROWS_AS(fit_ols(zip({1}, {1})), std::invalid_argument);
    CHECK_THROWS_AS(fit_ols(zip({3, 3, 3}, {1, 2, 3})), std::invalid_argument);
}

TEST_CASE("fit is invariant under point order") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> noise(-1, 1);
    std::vector<DataPoint> pts;
    for (int x = 0; x < 50; ++x)
        pts.push_back({static_cast<double>(x), 1.5 * x + 0.25 + noise(rng)});

    const auto base = fit_ols(pts);
    std::shuffle(pts.begin(), pts.end(), rng);
    const auto shuffled = fit_ols(pts);
    CHECK(shuffled.slope == doctest::Approx(base.slope).epsilon(1e-12));
    CHECK(shuffled.intercept == doctest::Approx(base.intercept).epsilon(1e-12));
    CHECK(shuffled.r_squared == doctest::Approx(base.r_squared).epsilon(1e-12));
    CHECK(shuffled.residual_median ==
          doctest::Approx(base.residual_median).epsilon(1e-12));
}

TEST_CASE("fit transforms predictably under axis scaling") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> noise(-1, 1);
    std::vector<DataPoint> pts, x_scaled, y_scaled;
    for (int x = 1; x <= 40; ++x) {
        const double y = 0.7 * x + 3 + noise(rng);
        pts.push_back({static_cast<double>(x), y});
        x_scaled.push_back({10.0 * x, y});
        y_scaled.push_back({static_cast<double>(x), 10.0 * y});
    }
    const auto base = fit_ols(pts);
    CHECK(fit_ols(x_scaled).slope == doctest::Approx(base.slope / 10).epsilon(eps));
    CHECK(fit_ols(y_scaled).slope == doctest::Approx(base.slope * 10).epsilon(eps));
    CHECK(fit_ols(y_scaled).intercept ==
          doctest::Approx(base.intercept * 10).epsilon(eps));
    CHECK(fit_ols(y_scaled).r_squared ==
          doctest::Approx(base.r_squared).epsilon(eps));
}

TEST_CASE("residuals of a least-squares fit sum to zero") {
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> noise(-5, 5);
    std::vector<DataPoint> pts;
    for (int x = 0; x < 200; ++x)
        pts.push_back({static_cast<double>(x), 2 * x + noise(rng)});
    const auto fit = fit_ols(pts);
    double sum = 0;
    for (const DataPoint& p : pts)
        sum += p.y - predict(fit, p.x);
    CHECK(std::abs(sum) < 1e-8);
    CHECK(fit.residual_min <= fit.residual_q1);
    CHECK(fit.residual_q1 <= fit.residual_median);
    CHECK(fit.residual_median <= fit.residual_q3);
    CHECK(fit.residual_q3 <= fit.residual_max);
}

TEST_CASE("prediction applies the fitted line") {
    RegressionFit fit;
    fit.slope = 1.584509;
    fit.intercept = -0.061720;
    CHECK(predict(fit, 96) == doctest::Approx(152.051144).epsilon(1e-8));
    CHECK(predict(fit, 96) == doctest::Approx(152.0511).epsilon(1e-3));
    CHECK(predict(fit, 92) == doctest::Approx(145.713108).epsilon(1e-3));
    CHECK(predict(fit, 0) == doctest::Approx(-0.061720).epsilon(1e-12));
}

TEST_CASE("text and json reports carry the fit") {
    const auto fit = fit_ols(zip({1, 2, 3, 4, 5}, {1, 2, 4, 8, 16}));

    const std::string text = to_text(fit);
    CHECK(text.find("slope            3.600000") != std::string::npos);
    CHECK(text.find("intercept        -4.600000") != std::string::npos);
    CHECK(text.find("n_points         5") != std::string::npos);
    CHECK(text.find("residual_q3      2.000000") != std::string::npos);

    const auto j = nlohmann::json::parse(to_json(fit));
    CHECK(j["n_points"] == 5);
    CHECK(j["slope"].get<double>() == doctest::Approx(3.6).epsilon(eps));
    CHECK(j["intercept"].get<double>() == doctest::Approx(-4.6).epsilon(eps));
    CHECK(j["residuals"]["q1"].get<double>() == doctest::Approx(-1.8).epsilon(eps));
    CHECK(j["residuals"]["max"].get<double>() == doctest::Approx(2.6).epsilon(eps));
}
