#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "levy/numeric.hpp"
#include "levy/rng.hpp"
#include "levy/step_law.hpp"
#include "support/stats.hpp"

using levy::RandomStream;
using levy::StepLaw;

TEST(StepLawNormalization, PowerLawBranch) {
    EXPECT_NEAR(StepLaw(1.0, 1e4).normalization(), 100.0 / 99.0, 1e-14);
    // c(n) -> 1 as n grows.
    EXPECT_NEAR(StepLaw(0.5, 1e12).normalization(), 1.0, 2e-3);
    EXPECT_NEAR(StepLaw(0.5, 1e300).normalization(), 1.0, 1e-12);
    EXPECT_GT(StepLaw(0.5, 1e4).normalization(), 1.0);
}

TEST(StepLawNormalization, GaussianBranch) {
    // 1 / (erf(100/sqrt 2) - erf(1/sqrt 2)), frozen from a 40-digit evaluation.
    EXPECT_NEAR(StepLaw(2.0, 1e4, 1.0).normalization(), 3.151487187534377, 1e-12);
}

TEST(StepLawCcdf, PiecewiseValues) {
    const StepLaw law(1.0, 1e4);
    EXPECT_DOUBLE_EQ(law.ccdf(0.5), 1.0);
    EXPECT_DOUBLE_EQ(law.ccdf(1.0), 1.0);
    EXPECT_NEAR(law.ccdf(10.0), (100.0 / 99.0) * (0.1 - 0.01), 1e-15);
    EXPECT_DOUBLE_EQ(law.ccdf(100.0), 0.0);
    EXPECT_DOUBLE_EQ(law.ccdf(1e9), 0.0);
}

TEST(StepLawCcdf, EdgesAndMonotoneOnGrid) {
    for (const double alpha : {0.6, 1.0, 1.5, 2.0}) {
        for (const double n : {1024.0, 16384.0, 1048576.0}) {
            const StepLaw law(alpha, n);
            EXPECT_DOUBLE_EQ(law.ccdf(1.0), 1.0) << "alpha=" << alpha << " n=" << n;
            EXPECT_DOUBLE_EQ(law.ccdf(std::sqrt(n)), 0.0);
            double prev = 1.0;
            const double zmax = std::sqrt(n);
            for (int i = 1; i <= 1000; ++i) {
                const double z = 1.0 + (zmax - 1.0) * i / 1000.0;
                const double value = law.ccdf(z);
                EXPECT_LE(value, prev + 1e-15);
                prev = value;
            }
        }
    }
}

TEST(StepLawDensity, IntegratesToOne) {
    for (const double alpha : {0.6, 1.0, 1.5, 2.0}) {
        const StepLaw law(alpha, 1e4);
        const double mass = levy::adaptive_simpson([&law](double z) { return law.density(z); },
                                                   1.0, 100.0, 1e-10, 16);
        EXPECT_NEAR(mass, 1.0, 1e-8) << "alpha=" << alpha;
    }
}

TEST(StepLawSample, MonotoneInU) {
    for (const double alpha : {0.7, 2.0}) {
        const StepLaw law(alpha, 4096.0);
        double prev = 0.0;
        for (int i = 1; i < 200; ++i) {
            const double z = law.sample(i / 200.0);
            EXPECT_GE(z, prev);
            EXPECT_GE(z, 1.0);
            EXPECT_LE(z, law.support_max());
            prev = z;
        }
    }
}

TEST(StepLawSample, MedianOfLimitLaw) {
    // alpha = 1, n -> infinity: ccdf -> 1/z, so the median is 2.
    const StepLaw law(1.0, 1e12);
    EXPECT_NEAR(law.sample(0.5), 2.0, 1e-5);
}

TEST(StepLawSample, InverseCdfRoundTrip) {
    for (const double alpha : {0.4, 1.0, 1.7}) {
        const StepLaw law(alpha, 65536.0);
        for (const double u : {1e-9, 1e-4, 0.1, 0.5, 0.9, 0.9999, 1.0 - 1e-9}) {
            EXPECT_NEAR(law.ccdf(law.sample(u)), 1.0 - u, 1e-9)
                << "alpha=" << alpha << " u=" << u;
        }
    }
}

TEST(StepLawSample, GaussianNewtonMatchesPlainBisection) {
    const StepLaw law(2.0, 1e4, 1.0);
    std::vector<double> us = {1e-12, 1e-6, 0.01, 0.25, 0.5, 0.75, 0.99, 1.0 - 1e-6, 1.0 - 1e-12};
    RandomStream stream(5, 0);
    for (int i = 0; i < 50; ++i) us.push_back(stream.next_unit());
    for (const double u : us) {
        const double fast = law.sample(u);
        const double slow = law.sample_gaussian_bisection(u);
        // In the far tail erf is flat to the last ulp over z windows wider
        // than any root tolerance, so two correct solvers may differ there.
        // Either the roots agree or both invert the CCDF to within erf
        // round-off.
        if (std::abs(fast - slow) > 5e-12) {
            EXPECT_NEAR(law.ccdf(fast), 1.0 - u, 1e-14) << "u=" << u;
            EXPECT_NEAR(law.ccdf(slow), 1.0 - u, 1e-14) << "u=" << u;
        }
    }
}

TEST(StepLawSample, GaussianRoundTrip) {
    const StepLaw law(2.0, 1e4, 1.0);
    for (const double u : {1e-6, 0.1, 0.5, 0.9, 1.0 - 1e-6})
        EXPECT_NEAR(law.ccdf(law.sample(u)), 1.0 - u, 1e-10);
}

TEST(StepLawSample, EmpiricalCcdfMatchesByKs) {
    for (const double alpha : {0.8, 1.5, 2.0}) {
        const StepLaw law(alpha, 65536.0);
        std::vector<double> sample(1'000'000);
        RandomStream stream(2024, static_cast<std::uint64_t>(alpha * 10));
        for (double& z : sample) z = law.sample(stream);
        const double d =
            levy_test::ks_distance(std::move(sample), [&law](double z) { return law.cdf(z); });
        EXPECT_LT(d, 0.005) << "alpha=" << alpha;
    }
}

TEST(StepLawConditionalMean, ClosedForms) {
    EXPECT_NEAR(StepLaw(1.0, 1e6).conditional_mean_below(100.0), 4.651687056553628, 1e-12);
    EXPECT_NEAR(StepLaw(0.5, 1e6).conditional_mean_below(50.0), std::sqrt(50.0), 1e-12);
    EXPECT_NEAR(StepLaw(1.5, 1e6).conditional_mean_below(16.0), 16.0 / 7.0, 1e-12);
    EXPECT_NEAR(StepLaw(2.0, 1e6, 1.0).conditional_mean_below(3.0), 1.510049513243984, 1e-12);
}

TEST(StepLawConditionalMean, LargeCutoffLimit) {
    // alpha in (1,2): E[Z | Z <= b] -> alpha/(alpha-1) as b grows.
    EXPECT_NEAR(StepLaw(1.5, 1e14).conditional_mean_below(1e6), 3.0, 1e-2);
}

TEST(StepLawConditionalMean, RejectsOutOfRangeCutoff) {
    const StepLaw law(1.0, 1e4);
    EXPECT_THROW(law.conditional_mean_below(1.0), std::invalid_argument);
    EXPECT_THROW(law.conditional_mean_below(0.5), std::invalid_argument);
    EXPECT_THROW(law.conditional_mean_below(101.0), std::invalid_argument);
    EXPECT_NO_THROW(law.conditional_mean_below(100.0));
}

TEST(StepLawConditionalMean, MatchesMonteCarlo) {
    for (const double alpha : {0.7, 1.0, 1.5, 2.0}) {
        const StepLaw law(alpha, 16384.0);
        const double b = 64.0;
        RandomStream stream(77, static_cast<std::uint64_t>(alpha * 100));
        double sum = 0.0;
        std::uint64_t kept = 0;
        for (int i = 0; i < 1'000'000; ++i) {
            const double z = law.sample(stream);
            if (z <= b) {
                sum += z;
                ++kept;
            }
        }
        const double mc = sum / double(kept);
        const double closed = law.conditional_mean_below(b);
        EXPECT_NEAR(mc / closed, 1.0, 0.01) << "alpha=" << alpha;
    }
}

TEST(StepLawSecondMoment, ClosedFormAndQuadrature) {
    EXPECT_NEAR(StepLaw(1.0, 1e4).second_moment(), 100.0, 1e-9);
    // Truncated Gaussian on [1, 100], sigma = 1; frozen from a 40-digit
    // evaluation of the closed form.
    EXPECT_NEAR(StepLaw(2.0, 1e4, 1.0).second_moment(), 2.525135276160981, 1e-9);
}

TEST(StepLawSecondMoment, MonotoneInN) {
    for (const double alpha : {0.5, 1.0, 1.9}) {
        double prev = 0.0;
        for (double n = 1024.0; n <= 1048576.0; n *= 4.0) {
            const double m2 = StepLaw(alpha, n).second_moment();
            EXPECT_GT(m2, prev);
            prev = m2;
        }
    }
}

TEST(StepLawSecondMoment, MatchesMonteCarlo) {
    for (const double alpha : {1.0, 1.5, 2.0}) {
        const StepLaw law(alpha, 16384.0);
        RandomStream stream(31, static_cast<std::uint64_t>(alpha * 100));
        double sum = 0.0;
        const int m = 1'000'000;
        for (int i = 0; i < m; ++i) {
            const double z = law.sample(stream);
            sum += z * z;
        }
        EXPECT_NEAR(sum / m / law.second_moment(), 1.0, 0.02) << "alpha=" << alpha;
    }
}

TEST(StepLawSecondMoment, GrowthExponentMatchesTheory) {
    // E[Z^2] scales as n^{1 - alpha/2}; fit over n = 2^10 .. 2^20.
    for (const double alpha : {0.6, 1.0, 1.5}) {
        std::vector<double> xs, ys;
        for (double n = 1024.0; n <= 1048576.0; n *= 4.0) {
            xs.push_back(std::log(n));
            ys.push_back(std::log(StepLaw(alpha, n).second_moment()));
        }
        const auto fit = levy::linear_fit(xs, ys);
        EXPECT_NEAR(fit.slope, 1.0 - alpha / 2.0, 0.05) << "alpha=" << alpha;
    }
}

TEST(StepLaw, RejectsInvalidParameters) {
    EXPECT_THROW(StepLaw(0.0, 1e4), std::invalid_argument);
    EXPECT_THROW(StepLaw(-1.0, 1e4), std::invalid_argument);
    EXPECT_THROW(StepLaw(2.5, 1e4), std::invalid_argument);
    EXPECT_THROW(StepLaw(1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(StepLaw(1.0, 1e4, 0.0), std::invalid_argument);
    const StepLaw law(1.0, 1e4);
    EXPECT_THROW(law.sample(0.0), std::invalid_argument);
    EXPECT_THROW(law.sample(1.0), std::invalid_argument);
}
