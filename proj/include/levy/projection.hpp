#ifndef LEVY_PROJECTION_HPP
#define LEVY_PROJECTION_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "levy/numeric.hpp"
#include "levy/step_law.hpp"

namespace levy {

// Angular constant of the projected step law:
// cstar(alpha) = (2/pi) * integral_0^{pi/2} cos(v)^alpha dv.
inline double cstar(double alpha) {
    if (!(alpha > 0.0 && alpha <= 2.0)) throw std::invalid_argument("cstar: alpha outside (0,2]");
    return 2.0 / M_PI *
           adaptive_simpson([alpha](double v) { return std::pow(std::cos(v), alpha); },
                            0.0, M_PI / 2.0, 1e-10, 8);
}

// Exact distribution of the projected step Z|cos(theta)| at finite n, for
// alpha in (0,2), plus its n -> infinity power-law limit cstar / z^alpha.
class ProjectedLaw {
public:
    ProjectedLaw(double alpha, double n) : alpha_(alpha), n_(n) {
        if (!(alpha > 0.0 && alpha < 2.0)) throw std::invalid_argument("ProjectedLaw: alpha outside (0,2)");
        if (!(n > 1.0)) throw std::invalid_argument("ProjectedLaw: n must exceed 1");
        sqrt_n_ = std::sqrt(n_);
        cn_ = 1.0 / (1.0 - std::pow(n_, -alpha_ / 2.0));
        n_pow_ = std::pow(n_, -alpha_ / 2.0);
    }

    double alpha() const { return alpha_; }
    double n() const { return n_; }
    double normalization() const { return cn_; }

    // P{Z |cos theta| > z} for z in [1, sqrt(n)]:
    //   (2 c(n) / pi z^alpha) int_0^{acos(z/sqrt(n))} cos(v)^alpha dv
    //   - (2 c(n) / pi n^{alpha/2}) acos(z / sqrt(n)).
    double ccdf(double z) const {
        if (!(z >= 1.0 && z <= sqrt_n_))
            throw std::invalid_argument("ProjectedLaw::ccdf: z outside [1, sqrt(n)]");
        if (z == sqrt_n_) return 0.0;
        const double cut = std::acos(z / sqrt_n_);
        const double integral = cos_pow_integral(cut);
        return 2.0 * cn_ / M_PI * (integral / std::pow(z, alpha_) - n_pow_ * cut);
    }

    // Extension to z in [0, 1): for headings with cos(v) > z the projected
    // step exceeds z with probability 1 because Z >= 1. Used for moment
    // quadrature; the closed form above only covers z >= 1.
    double ccdf_extended(double z) const {
        if (z >= 1.0) return ccdf(std::min(z, sqrt_n_));
        if (!(z >= 0.0)) throw std::invalid_argument("ProjectedLaw::ccdf_extended: negative z");
        if (z == 0.0) return 1.0;
        const double lo = std::acos(std::min(1.0, z));
        const double hi = std::acos(z / sqrt_n_);
        const double integral =
            adaptive_simpson([this, z](double v) { return std::pow(std::cos(v) / z, alpha_) - n_pow_; },
                             lo, hi, 1e-10, 4);
        return 2.0 / M_PI * (lo + cn_ * integral);
    }

    double limit_ccdf(double z) const {
        if (!(z >= 1.0)) throw std::invalid_argument("ProjectedLaw::limit_ccdf: z must be >= 1");
        return cstar(alpha_) / std::pow(z, alpha_);
    }

    // E[(Z cos theta)^2] by quadrature against this CCDF; cross-validates
    // the independence route E[Z^2] E[cos^2 theta] = E[Z^2] / 2.
    double second_moment_quadrature() const {
        const double scale = std::pow(n_, 1.0 - alpha_ / 2.0);
        return adaptive_simpson([this](double z) { return 2.0 * z * ccdf_extended(z); },
                                0.0, sqrt_n_, 1e-7 * scale, 32);
    }

private:
    double cos_pow_integral(double upper) const {
        if (upper <= 0.0) return 0.0;
        return adaptive_simpson([this](double v) { return std::pow(std::cos(v), alpha_); },
                                0.0, upper, 1e-10, 4);
    }

    double alpha_;
    double n_;
    double sqrt_n_ = 0.0;
    double cn_ = 0.0;
    double n_pow_ = 0.0;
};

// E[(Z cos theta)^2] = E[Z^2]/2 by independence of length and heading.
inline double projected_second_moment(const StepLaw& law) {
    return law.second_moment() / 2.0;
}

struct TailBoundRow {
    double z = 0.0;
    double density = 0.0;  // numeric dF/dz
    double bound = 0.0;    // alpha cstar c(n) / z^{alpha+1}
    bool pass = false;
};

struct TailBoundReport {
    std::vector<TailBoundRow> rows;
    bool all_pass = true;
};

// Checks the projected density bound dF/dz <= alpha cstar c(n) / z^{alpha+1}
// at every grid point; the derivative is a central difference of the exact
// CCDF with relative step 1e-4 and the comparison allows 1e-6 slack.
inline TailBoundReport density_tail_bound_check(const ProjectedLaw& law,
                                                std::span<const double> grid) {
    const double cs = cstar(law.alpha());
    const double sqrt_n = std::sqrt(law.n());
    TailBoundReport report;
    report.rows.reserve(grid.size());
    for (double z : grid) {
        if (!(z >= 1.0 && z < sqrt_n))
            throw std::invalid_argument("density_tail_bound_check: grid point outside [1, sqrt(n))");
        const double h = 1e-4 * z;
        const double up = std::min(z + h, sqrt_n);
        const double dn = std::max(z - h, 1.0);
        const double deriv = -(law.ccdf(up) - law.ccdf(dn)) / (up - dn);
        TailBoundRow row;
        row.z = z;
        row.density = deriv;
        row.bound = law.alpha() * cs * law.normalization() / std::pow(z, law.alpha() + 1.0);
        row.pass = deriv <= row.bound + 1e-6;
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace levy

#endif
