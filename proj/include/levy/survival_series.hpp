#ifndef LEVY_SURVIVAL_SERIES_HPP
#define LEVY_SURVIVAL_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace levy {

// Series coefficient eta_i = (2(1 - cos(i pi))/(i pi)) sin(i pi / 2):
// zero for even i, alternating +-4/(i pi) for odd i. Evaluated from the
// parity pattern, which is the exact value of the formula.
inline double eta(std::uint64_t i) {
    if (i == 0) throw std::invalid_argument("eta: index starts at 1");
    if (i % 2 == 0) return 0.0;
    const double mag = 4.0 / (double(i) * M_PI);
    return (i % 4 == 1) ? mag : -mag;
}

// Partial sum of eta up to i = imax; converges to 1 (Leibniz series) with
// alternating-series error at most 4 / (pi (imax + 1)).
inline double eta_partial_sum(std::uint64_t imax) {
    double sum = 0.0;
    for (std::uint64_t i = 1; i <= imax; i += 2) sum += eta(i);
    return sum;
}

// Continuum eigenseries for a particle on the trapping interval [0, 2r],
// started at the center. Evaluates the occupation density P(x,t), the
// survival probability S(t), and the exit-time CDF 1 - S(t). Eigenfunctions
// are psi_i(x) = sqrt(1/r) sin(i pi x / 2r) with decay rates
// rho_i / r^alpha = F (i pi / 2)^alpha / r^alpha.
class SurvivalSeries {
public:
    SurvivalSeries(double alpha, double r, double diffusion = 1.0, double tol = 1e-12,
                   std::uint64_t max_terms = 50'000'000)
        : alpha_(alpha), r_(r), diffusion_(diffusion), tol_(tol), max_terms_(max_terms) {
        if (!(alpha > 0.0 && alpha <= 2.0)) throw std::invalid_argument("SurvivalSeries: alpha outside (0,2]");
        if (!(r > 0.0)) throw std::invalid_argument("SurvivalSeries: r must be positive");
        if (!(diffusion > 0.0)) throw std::invalid_argument("SurvivalSeries: diffusion must be positive");
        if (!(tol > 0.0)) throw std::invalid_argument("SurvivalSeries: tol must be positive");
        inv_r_alpha_ = std::pow(r_, -alpha_);
    }

    double alpha() const { return alpha_; }
    double r() const { return r_; }
    double diffusion() const { return diffusion_; }

    double rho(std::uint64_t i) const { return diffusion_ * std::pow(double(i) * M_PI / 2.0, alpha_); }
    double lambda_abs(std::uint64_t i) const { return std::pow(double(i) * M_PI / (2.0 * r_), alpha_); }

    // Dominant decay rate rho_1 / r^alpha; times r^alpha it is F (pi/2)^alpha
    // independent of r.
    double decay_rate() const { return rho(1) * inv_r_alpha_; }

    // S(t) = sum_i eta_i exp(-rho_i t / r^alpha). S(0) is 1 by normalization;
    // the series is summed only for t > 0, where it converges absolutely.
    // Truncation stops after 20 consecutive term envelopes drop below
    // tol * max(|partial sum|, 1). Raw value: may leave [0,1] slightly for
    // tiny t, which is truncation noise the caller may want to see.
    double survival_raw(double t) const {
        if (!(t >= 0.0)) throw std::invalid_argument("survival: t must be >= 0");
        if (t == 0.0) return 1.0;
        const double rate = t * inv_r_alpha_ * diffusion_;
        double sum = 0.0;
        int quiet = 0;
        for (std::uint64_t i = 1; i <= max_terms_; i += 2) {
            const double envelope = 4.0 / (double(i) * M_PI) *
                                    std::exp(-std::pow(double(i) * M_PI / 2.0, alpha_) * rate);
            if (envelope < tol_ * std::max(std::abs(sum), 1.0)) {
                if (++quiet >= 20) break;
            } else {
                quiet = 0;
            }
            sum += (i % 4 == 1 ? envelope : -envelope);
        }
        return sum;
    }

    double survival(double t) const { return std::clamp(survival_raw(t), 0.0, 1.0); }

    // P{T_x(r) <= t} = 1 - S(t); non-decreasing for t > 0.
    double fet_cdf(double t) const { return 1.0 - survival_raw(t); }
    double fet_cdf_clamped(double t) const { return std::clamp(fet_cdf(t), 0.0, 1.0); }

    // Occupation density P(x,t) = sum_i psi_i(r) psi_i(x) exp(lambda_i F t)
    // on [0, 2r]; zero at both absorbing boundaries.
    double occupation(double x, double t) const {
        if (!(t > 0.0)) throw std::invalid_argument("occupation: t must be positive");
        if (!(x >= 0.0 && x <= 2.0 * r_)) throw std::invalid_argument("occupation: x outside [0, 2r]");
        if (x == 0.0 || x == 2.0 * r_) return 0.0;
        const double rate = t * inv_r_alpha_ * diffusion_;
        double sum = 0.0;
        int quiet = 0;
        for (std::uint64_t i = 1; i <= max_terms_; i += 2) {
            const double envelope = std::exp(-std::pow(double(i) * M_PI / 2.0, alpha_) * rate) / r_;
            if (envelope < tol_ * std::max(std::abs(sum), 1.0)) {
                if (++quiet >= 20) break;
            } else {
                quiet = 0;
            }
            const double sign = (i % 4 == 1) ? 1.0 : -1.0;  // sin(i pi / 2), odd i
            sum += sign * envelope * std::sin(double(i) * M_PI * x / (2.0 * r_));
        }
        return sum;
    }

private:
    double alpha_;
    double r_;
    double diffusion_;
    double tol_;
    std::uint64_t max_terms_;
    double inv_r_alpha_;
};

} // namespace levy

#endif
