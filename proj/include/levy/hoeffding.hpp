#ifndef LEVY_HOEFFDING_HPP
#define LEVY_HOEFFDING_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "levy/projection.hpp"
#include "levy/step_law.hpp"

namespace levy {

// Upper bound on P{|X_x(t)| >= r / sqrt(2)} for the projected flight after t
// steps, with s2 = E[(Z cos theta)^2]. Values above 1 are reported raw; as a
// probability bound they are trivially satisfied.
inline double displacement_tail_bound(double r, double t, double s2) {
    if (!(r > 0.0 && t > 0.0 && s2 > 0.0))
        throw std::invalid_argument("displacement_tail_bound: arguments must be positive");
    return 2.0 * std::exp(-r * r / (8.0 * t * s2));
}

// Upper bound on P{T_x(r / sqrt(2)) <= k}: union bound over the k step ends.
inline double exit_time_tail_bound(double r, double k, double s2) {
    if (!(r > 0.0 && s2 > 0.0) || !(k >= 1.0))
        throw std::invalid_argument("exit_time_tail_bound: need r, s2 > 0 and k >= 1");
    return 2.0 * k * std::exp(-r * r / (8.0 * k * s2));
}

struct VanishingRow {
    double n = 0.0;
    double t_tilde = 0.0;  // n^{alpha/2 - epsilon}
    double s2 = 0.0;       // exact E[(Z cos theta)^2] at this n
    double bound = 0.0;    // 2 t exp(-c_d^2 n / (8 t s2))
};

struct VanishingReport {
    std::vector<VanishingRow> rows;
    // Smallest index from which the bound decreases strictly to the end of
    // the grid; rows.size() when it never settles into decrease.
    std::size_t decreasing_from = 0;
    double final_value = 0.0;
};

// Evaluates the exit-probability bound along an n grid at the sub-critical
// horizon t(n) = n^{alpha/2 - epsilon}. The bound must eventually fall
// toward zero, which is the computable content of the scaling lower bound.
inline VanishingReport vanishing_check(double alpha, double epsilon,
                                       std::span<const double> n_grid, double c_d,
                                       double sigma = 1.0) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("vanishing_check: epsilon must be positive");
    if (!(alpha > 0.0 && alpha <= 2.0)) throw std::invalid_argument("vanishing_check: alpha outside (0,2]");
    if (!(c_d > 0.0 && c_d < 0.5)) throw std::invalid_argument("vanishing_check: c_d outside (0, 1/2)");
    VanishingReport report;
    report.rows.reserve(n_grid.size());
    for (double n : n_grid) {
        VanishingRow row;
        row.n = n;
        row.t_tilde = std::pow(n, alpha / 2.0 - epsilon);
        row.s2 = projected_second_moment(StepLaw(alpha, n, sigma));
        row.bound = 2.0 * row.t_tilde *
                    std::exp(-c_d * c_d * n / (8.0 * row.t_tilde * row.s2));
        report.rows.push_back(row);
    }
    std::size_t from = report.rows.size();
    for (std::size_t i = report.rows.size(); i-- > 1;) {
        if (report.rows[i].bound < report.rows[i - 1].bound)
            from = i - 1;
        else
            break;
    }
    report.decreasing_from = from;
    report.final_value = report.rows.empty() ? 0.0 : report.rows.back().bound;
    return report;
}

} // namespace levy

#endif
