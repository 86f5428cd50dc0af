#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "levy/numeric.hpp"

using levy::adaptive_simpson;
using levy::linear_fit;
using levy::normal_quantile;

TEST(AdaptiveSimpson, SmoothIntegrals) {
    EXPECT_NEAR(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, M_PI), 2.0, 1e-9);
    EXPECT_NEAR(adaptive_simpson([](double x) { return x * x; }, 0.0, 3.0), 9.0, 1e-10);
    EXPECT_NEAR(adaptive_simpson([](double x) { return std::exp(-x * x / 2.0); }, -8.0, 8.0),
                std::sqrt(2.0 * M_PI), 1e-9);
}

TEST(AdaptiveSimpson, EndpointSingularDerivative) {
    // cos(v)^alpha with alpha < 1 has an infinite derivative at pi/2.
    const double alpha = 0.3;
    const double got = adaptive_simpson(
        [alpha](double v) { return std::pow(std::cos(v), alpha); }, 0.0, M_PI / 2.0, 1e-10);
    // Closed form: sqrt(pi) Gamma((alpha+1)/2) / (2 Gamma(alpha/2 + 1)).
    const double want =
        std::sqrt(M_PI) * std::tgamma((alpha + 1.0) / 2.0) / (2.0 * std::tgamma(alpha / 2.0 + 1.0));
    EXPECT_NEAR(got, want, 1e-8);
}

TEST(AdaptiveSimpson, LocalizedMassIsNotMissed) {
    // A unit-width Gaussian near the left edge of a long interval. A single
    // top-level Simpson estimate samples only the ends and midpoint and
    // would accept 0; the initial panel split must catch the bump.
    const double got = adaptive_simpson(
        [](double x) { return std::exp(-(x - 3.0) * (x - 3.0) / 2.0); }, 0.0, 100.0, 1e-10);
    EXPECT_NEAR(got, std::sqrt(2.0 * M_PI), 1e-8);
}

TEST(NormalQuantile, MatchesReferenceValues) {
    EXPECT_NEAR(normal_quantile(0.975), 1.959963984540054, 2e-8);
    EXPECT_NEAR(normal_quantile(0.5), 0.0, 1e-12);
    EXPECT_NEAR(normal_quantile(0.025), -1.959963984540054, 2e-8);
    EXPECT_NEAR(normal_quantile(0.841344746068543), 1.0, 1e-7);
    EXPECT_THROW(normal_quantile(0.0), std::domain_error);
    EXPECT_THROW(normal_quantile(1.0), std::domain_error);
}

TEST(LinearFit, ExactLine) {
    std::vector<double> xs = {1, 2, 3, 4, 5};
    std::vector<double> ys;
    for (double x : xs) ys.push_back(3.5 * x - 2.0);
    const auto fit = linear_fit(xs, ys);
    EXPECT_NEAR(fit.slope, 3.5, 1e-12);
    EXPECT_NEAR(fit.intercept, -2.0, 1e-12);
    EXPECT_NEAR(fit.slope_stderr, 0.0, 1e-12);
    EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
}

TEST(LinearFit, NoisyLineHasSaneStderr) {
    std::vector<double> xs, ys;
    const double noise[] = {0.01, -0.02, 0.015, -0.01, 0.005, 0.02, -0.015, -0.005};
    for (int i = 0; i < 8; ++i) {
        xs.push_back(i);
        ys.push_back(2.0 * i + 1.0 + noise[i]);
    }
    const auto fit = linear_fit(xs, ys);
    EXPECT_NEAR(fit.slope, 2.0, 0.01);
    EXPECT_GT(fit.slope_stderr, 0.0);
    EXPECT_LT(fit.slope_stderr, 0.01);
    EXPECT_GT(fit.r_squared, 0.999);
}

TEST(LogSpaced, EndpointsAndMonotone) {
    const auto g = levy::log_spaced(0.01, 100.0, 9);
    EXPECT_DOUBLE_EQ(g.front(), 0.01);
    EXPECT_DOUBLE_EQ(g.back(), 100.0);
    for (std::size_t i = 1; i < g.size(); ++i) EXPECT_GT(g[i], g[i - 1]);
    EXPECT_NEAR(g[4], 1.0, 1e-12);
}
