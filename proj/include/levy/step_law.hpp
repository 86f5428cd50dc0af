#ifndef LEVY_STEP_LAW_HPP
#define LEVY_STEP_LAW_HPP

#include <cmath>
#include <stdexcept>

#include "levy/numeric.hpp"
#include "levy/rng.hpp"

namespace levy {

// Truncated step-size law on [1, sqrt(n)]. For alpha in (0,2) the tail is
// the power law z^{-alpha}; for alpha = 2 it is a Gaussian of scale sigma.
// Immutable after construction; sampling takes the random source as an
// argument, so one law can be shared across workers.
class StepLaw {
public:
    StepLaw(double alpha, double n, double sigma = 1.0)
        : alpha_(alpha), n_(n), sigma_(sigma) {
        if (!(alpha > 0.0 && alpha <= 2.0)) throw std::invalid_argument("StepLaw: alpha outside (0,2]");
        if (!(n > 1.0)) throw std::invalid_argument("StepLaw: n must exceed 1");
        if (!(sigma > 0.0)) throw std::invalid_argument("StepLaw: sigma must be positive");
        sqrt_n_ = std::sqrt(n_);
        if (gaussian()) {
            erf_lo_ = std::erf(1.0 / (std::sqrt(2.0) * sigma_));
            erf_hi_ = std::erf(sqrt_n_ / (std::sqrt(2.0) * sigma_));
            denom_ = erf_hi_ - erf_lo_;
            if (!(denom_ > 0.0))
                throw std::invalid_argument("StepLaw: no probability mass on [1, sqrt(n)] for this sigma");
        } else {
            n_pow_ = std::pow(n_, -alpha_ / 2.0);
            denom_ = 1.0 - n_pow_;
        }
    }

    double alpha() const { return alpha_; }
    double n() const { return n_; }
    double sigma() const { return sigma_; }
    double support_min() const { return 1.0; }
    double support_max() const { return sqrt_n_; }
    bool gaussian() const { return alpha_ == 2.0; }

    // c(n), the truncation normalization constant.
    double normalization() const { return 1.0 / denom_; }

    // P{Z > z}: 1 below the support, 0 at and above sqrt(n).
    double ccdf(double z) const {
        if (z < 1.0) return 1.0;
        if (z >= sqrt_n_) return 0.0;
        if (gaussian())
            return (erf_hi_ - std::erf(z / (std::sqrt(2.0) * sigma_))) / denom_;
        return (std::pow(z, -alpha_) - n_pow_) / denom_;
    }

    double cdf(double z) const { return 1.0 - ccdf(z); }

    double density(double z) const {
        if (z < 1.0 || z > sqrt_n_) return 0.0;
        if (gaussian())
            return std::sqrt(2.0 / M_PI) / sigma_ * std::exp(-z * z / (2.0 * sigma_ * sigma_)) / denom_;
        return alpha_ * std::pow(z, -alpha_ - 1.0) / denom_;
    }

    // Inverse-CDF sample: returns z with P{Z > z} = 1 - u. Always in
    // [1, sqrt(n)] and monotone non-decreasing in u.
    double sample(double u) const {
        if (!(u > 0.0 && u < 1.0)) throw std::invalid_argument("StepLaw::sample: u outside (0,1)");
        if (gaussian()) return invert_gaussian(erf_lo_ + u * denom_);
        const double v = 1.0 - u;
        double z = std::pow(v * denom_ + n_pow_, -1.0 / alpha_);
        if (z < 1.0) z = 1.0;
        if (z > sqrt_n_) z = sqrt_n_;
        return z;
    }

    double sample(RandomStream& stream) const { return sample(stream.next_unit()); }

    // E[Z | Z <= b] for b in (1, sqrt(n)]. The n-truncation cancels, so the
    // value depends on (alpha, sigma, b) only.
    double conditional_mean_below(double b) const {
        if (!(b > 1.0 && b <= sqrt_n_))
            throw std::invalid_argument("StepLaw::conditional_mean_below: b outside (1, sqrt(n)]");
        if (gaussian()) {
            const double s2 = sigma_ * sigma_;
            const double num = std::exp(-1.0 / (2.0 * s2)) - std::exp(-b * b / (2.0 * s2));
            const double den = std::erf(b / (std::sqrt(2.0) * sigma_)) -
                               std::erf(1.0 / (std::sqrt(2.0) * sigma_));
            return std::sqrt(2.0) * sigma_ / std::sqrt(M_PI) * num / den;
        }
        if (alpha_ == 1.0) return std::log(b) / (1.0 - 1.0 / b);
        const double a = alpha_;
        if (a < 1.0)
            return a / (1.0 - a) * (std::pow(b, 1.0 - a) - 1.0) / (1.0 - std::pow(b, -a));
        return a / (a - 1.0) * (1.0 - std::pow(b, 1.0 - a)) / (1.0 - std::pow(b, -a));
    }

    // E[Z^2]; finite for every alpha because the support is bounded.
    double second_moment() const {
        if (!gaussian())
            return normalization() * alpha_ * (std::pow(n_, 1.0 - alpha_ / 2.0) - 1.0) / (2.0 - alpha_);
        const double zcut = std::min(sqrt_n_, 1.0 + 42.0 * sigma_);
        return adaptive_simpson([this](double z) { return z * z * density(z); },
                                1.0, zcut, 1e-10, 16);
    }

    // Reference inversion for the Gaussian branch: plain bisection on erf to
    // 1e-12 absolute tolerance. The fast path below must agree with this.
    double sample_gaussian_bisection(double u) const {
        if (!gaussian()) throw std::logic_error("sample_gaussian_bisection: alpha != 2");
        if (!(u > 0.0 && u < 1.0)) throw std::invalid_argument("u outside (0,1)");
        const double target = erf_lo_ + u * denom_;
        double lo = 1.0, hi = sqrt_n_;
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            if (std::erf(mid / (std::sqrt(2.0) * sigma_)) < target)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }

private:
    // Solve erf(z / (sqrt(2) sigma)) = target on [1, sqrt(n)]: Newton from a
    // normal-quantile guess, with a bisection bracket as safeguard. Matches
    // the plain 1e-12 bisection but needs only a handful of erf evaluations.
    double invert_gaussian(double target) const {
        double lo = 1.0, hi = sqrt_n_;
        const double p = 0.5 * (1.0 + target);
        double z = (p < 1.0) ? sigma_ * normal_quantile(p) : hi;
        if (!(z > lo && z < hi)) z = 0.5 * (lo + hi);
        const double scale = std::sqrt(2.0) * sigma_;
        const double dcoef = std::sqrt(2.0 / M_PI) / sigma_;
        for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
            const double g = std::erf(z / scale) - target;
            if (g > 0.0)
                hi = z;
            else
                lo = z;
            const double deriv = dcoef * std::exp(-z * z / (2.0 * sigma_ * sigma_));
            double next = (deriv > 1e-300) ? z - g / deriv : 0.5 * (lo + hi);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            if (std::abs(next - z) < 1e-13) return next;
            z = next;
        }
        return z;
    }

    double alpha_;
    double n_;
    double sigma_;
    double sqrt_n_ = 0.0;
    double n_pow_ = 0.0;
    double denom_ = 0.0;
    double erf_lo_ = 0.0;
    double erf_hi_ = 0.0;
};

} // namespace levy

#endif
