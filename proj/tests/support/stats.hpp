#ifndef LEVY_TESTS_SUPPORT_STATS_HPP
#define LEVY_TESTS_SUPPORT_STATS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace levy_test {

// Kolmogorov-Smirnov distance between a sample and a continuous CDF.
template <typename Cdf>
double ks_distance(std::vector<double> sample, Cdf&& cdf) {
    if (sample.empty()) throw std::invalid_argument("ks_distance: empty sample");
    std::sort(sample.begin(), sample.end());
    const double m = double(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::abs(double(i + 1) / m - f));
        d = std::max(d, std::abs(double(i) / m - f));
    }
    return d;
}

// KS distance between two samples (two-sample statistic).
inline double ks_distance_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        d = std::max(d, std::abs(double(i) / a.size() - double(j) / b.size()));
    }
    return d;
}

inline double binomial_sigma(double p_hat, double trials) {
    return std::sqrt(std::max(p_hat * (1.0 - p_hat), 1e-12) / trials);
}

} // namespace levy_test

#endif
