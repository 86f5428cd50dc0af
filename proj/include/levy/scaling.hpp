#ifndef LEVY_SCALING_HPP
#define LEVY_SCALING_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "levy/empirical.hpp"
#include "levy/numeric.hpp"
#include "levy/rng.hpp"

namespace levy {

enum class Statistic { Q10, Q50, Q90, Mean };

inline const char* to_string(Statistic s) {
    switch (s) {
        case Statistic::Q10: return "q10";
        case Statistic::Q50: return "q50";
        case Statistic::Q90: return "q90";
        default: return "mean";
    }
}

inline Statistic statistic_from_string(const std::string& name) {
    if (name == "q10") return Statistic::Q10;
    if (name == "q50") return Statistic::Q50;
    if (name == "q90") return Statistic::Q90;
    if (name == "mean") return Statistic::Mean;
    throw std::invalid_argument("unknown statistic: " + name);
}

struct QuantileStats {
    double q10 = 0.0;
    double q50 = 0.0;
    double q90 = 0.0;
    double mean = 0.0;

    double get(Statistic s) const {
        switch (s) {
            case Statistic::Q10: return q10;
            case Statistic::Q50: return q50;
            case Statistic::Q90: return q90;
            default: return mean;
        }
    }
};

struct ScalingRow {
    double n = 0.0;
    QuantileStats stats;
    std::uint64_t trials = 0;
    std::uint64_t abandoned = 0;
    std::uint64_t seed = 0;
};

struct ScalingTable {
    ModelKind model = ModelKind::Flight;
    double alpha = 1.0;
    double c_d = 0.25;
    std::vector<ScalingRow> rows;  // sorted by n
};

struct ExponentFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double r_squared = 0.0;
    double theoretical = 0.0;
};

// Critical-delay growth exponents: flight scales as n^{alpha/2} for all
// alpha; the walk floor at velocity 1 forces n^{1/2} below alpha = 1.
inline double theoretical_exponent(ModelKind model, double alpha) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::invalid_argument("theoretical_exponent: alpha outside (0,2]");
    const double half_alpha = alpha / 2.0;
    return model == ModelKind::Flight ? half_alpha : std::max(0.5, half_alpha);
}

inline QuantileStats summarize(const EmpiricalFet& fet) {
    QuantileStats s;
    s.q10 = fet.quantile(0.10);
    s.q50 = fet.quantile(0.50);
    s.q90 = fet.quantile(0.90);
    s.mean = fet.mean();
    return s;
}

// One (model, alpha) sweep across the n grid. Cell i runs with the derived
// seed (master seed, grid index i); the whole table is deterministic.
inline ScalingTable run_scaling(ModelKind model, double alpha, std::span<const double> n_grid,
                                double c_d, std::uint64_t trials_per_n, std::uint64_t seed,
                                unsigned workers = 0, double sigma = 1.0,
                                TrialLimits limits = {}) {
    if (n_grid.size() < 2) throw std::invalid_argument("run_scaling: need at least 2 grid points");
    for (std::size_t i = 1; i < n_grid.size(); ++i)
        if (!(n_grid[i] > n_grid[i - 1]))
            throw std::invalid_argument("run_scaling: n grid must be strictly increasing");
    ScalingTable table;
    table.model = model;
    table.alpha = alpha;
    table.c_d = c_d;
    table.rows.reserve(n_grid.size());
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        BatchParams params;
        params.kind = model;
        params.alpha = alpha;
        params.n = n_grid[i];
        params.c_d = c_d;
        params.trials = trials_per_n;
        params.seed = derive_seed(seed, i);
        params.sigma = sigma;
        params.limits = limits;
        params.workers = workers;
        const BatchResult batch = run_batch(params);
        validate_abandonment(batch.fet);
        ScalingRow row;
        row.n = n_grid[i];
        row.stats = summarize(batch.fet);
        row.trials = trials_per_n;
        row.abandoned = batch.fet.abandoned;
        row.seed = params.seed;
        table.rows.push_back(row);
    }
    return table;
}

// Flight and walk tables from the same coupled trials, for the per-trial
// dominance and E[N] sandwich checks.
inline std::pair<ScalingTable, ScalingTable> run_coupled_scaling(
    double alpha, std::span<const double> n_grid, double c_d, std::uint64_t trials_per_n,
    std::uint64_t seed, unsigned workers = 0, double sigma = 1.0) {
    ScalingTable flight{ModelKind::Flight, alpha, c_d, {}};
    ScalingTable walk{ModelKind::Walk, alpha, c_d, {}};
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        BatchParams params;
        params.alpha = alpha;
        params.n = n_grid[i];
        params.c_d = c_d;
        params.trials = trials_per_n;
        params.seed = derive_seed(seed, i);
        params.sigma = sigma;
        params.workers = workers;
        const CoupledBatchResult batch = run_coupled_batch(params);
        validate_abandonment(batch.flight_fet);
        ScalingRow frow{n_grid[i], summarize(batch.flight_fet), trials_per_n,
                        batch.flight_fet.abandoned, params.seed};
        ScalingRow wrow{n_grid[i], summarize(batch.walk_fet), trials_per_n,
                        batch.walk_fet.abandoned, params.seed};
        flight.rows.push_back(frow);
        walk.rows.push_back(wrow);
    }
    return {flight, walk};
}

// OLS of ln(statistic) against ln(n). The theoretical exponent is attached
// for downstream reporting.
inline ExponentFit fit_exponent(const ScalingTable& table, Statistic statistic) {
    if (table.rows.size() < 4) throw std::invalid_argument("fit_exponent: need at least 4 rows");
    std::vector<double> xs, ys;
    xs.reserve(table.rows.size());
    ys.reserve(table.rows.size());
    for (const ScalingRow& row : table.rows) {
        const double value = row.stats.get(statistic);
        if (!(value > 0.0)) throw std::invalid_argument("fit_exponent: nonpositive statistic");
        xs.push_back(std::log(row.n));
        ys.push_back(std::log(value));
    }
    const LinearFit lf = linear_fit(xs, ys);
    ExponentFit fit;
    fit.slope = lf.slope;
    fit.intercept = lf.intercept;
    fit.slope_stderr = lf.slope_stderr;
    fit.r_squared = lf.r_squared;
    fit.theoretical = theoretical_exponent(table.model, table.alpha);
    return fit;
}

struct PhasePoint {
    double alpha = 0.0;
    ExponentFit fit;
};

// Walk exponents across an alpha grid spanning the kink at alpha = 1.
inline std::vector<PhasePoint> phase_transition_scan(std::span<const double> alpha_grid,
                                                     std::span<const double> n_grid, double c_d,
                                                     std::uint64_t trials_per_n,
                                                     std::uint64_t seed, unsigned workers = 0,
                                                     Statistic statistic = Statistic::Q50) {
    bool below = false, above = false;
    for (double a : alpha_grid) {
        below = below || a < 1.0;
        above = above || a > 1.0;
    }
    if (!below || !above)
        throw std::invalid_argument("phase_transition_scan: alpha grid must span both sides of 1");
    std::vector<PhasePoint> points;
    points.reserve(alpha_grid.size());
    for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
        const ScalingTable table =
            run_scaling(ModelKind::Walk, alpha_grid[i], n_grid, c_d, trials_per_n,
                        derive_seed(seed, 0x1000 + i), workers);
        points.push_back({alpha_grid[i], fit_exponent(table, statistic)});
    }
    return points;
}

struct SandwichRow {
    double t = 0.0;
    double lower = 0.0;   // P{T_x(r) <= t}
    double middle = 0.0;  // P{T(r) <= t}
    double upper = 0.0;   // 2 P{T_x(r/sqrt 2) <= t}
    bool pass = false;
};

struct SandwichReport {
    std::vector<SandwichRow> rows;
    bool all_pass = true;
    double slack_lower = 0.0;
    double slack_upper = 0.0;
};

// Empirical check of P{T_x(r) <= t} <= P{T(r) <= t} <= 2 P{T_x(r/sqrt2) <= t}
// at the requested times (deciles of T when the grid is empty), with
// two-sided 99% DKW slack on each side. Flight dynamics only.
inline SandwichReport sandwich_report(double alpha, double n, double c_d, std::uint64_t trials,
                                      std::span<const double> t_grid, std::uint64_t seed,
                                      unsigned workers = 0, double sigma = 1.0) {
    BatchParams params;
    params.kind = ModelKind::Flight;
    params.alpha = alpha;
    params.n = n;
    params.c_d = c_d;
    params.trials = trials;
    params.sigma = sigma;
    params.workers = workers;

    params.seed = derive_seed(seed, 0);
    const BatchResult mid = run_batch(params);
    params.seed = derive_seed(seed, 1);
    const BatchResult lower = run_projected_batch(params);
    params.seed = derive_seed(seed, 2);
    params.c_d = c_d / std::sqrt(2.0);
    const BatchResult upper = run_projected_batch(params);
    validate_abandonment(mid.fet);
    validate_abandonment(lower.fet);
    validate_abandonment(upper.fet);

    const double eps_mid = EmpiricalFet::dkw_epsilon(mid.fet.completed(), 0.01);
    const double eps_lower = EmpiricalFet::dkw_epsilon(lower.fet.completed(), 0.01);
    const double eps_upper = EmpiricalFet::dkw_epsilon(upper.fet.completed(), 0.01);

    std::vector<double> times(t_grid.begin(), t_grid.end());
    if (times.empty())
        for (int d = 1; d <= 9; ++d) times.push_back(mid.fet.quantile(0.1 * d));

    SandwichReport report;
    report.slack_lower = eps_lower + eps_mid;
    report.slack_upper = eps_mid + 2.0 * eps_upper;
    for (double t : times) {
        SandwichRow row;
        row.t = t;
        row.lower = lower.fet.cdf_at(t);
        row.middle = mid.fet.cdf_at(t);
        row.upper = 2.0 * upper.fet.cdf_at(t);
        row.pass = (row.lower <= row.middle + report.slack_lower) &&
                   (row.middle <= row.upper + report.slack_upper);
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(row);
    }
    return report;
}

struct WalkMeanBoundReport {
    double mean_walk = 0.0;      // sample mean of T under walk
    double mean_steps = 0.0;     // sample mean of N(n)
    double mean_flight = 0.0;    // sample mean of flight exit time
    double conditional_mean = 0.0;  // E[Z | Z <= 2 c_d sqrt(n)], closed form
    double bound = 0.0;          // 2 c_d sqrt(n) + conditional_mean * mean_steps
    double slack = 0.0;          // 3 sigma of the walk sample mean
    double ratio = 0.0;          // bound / mean_walk
    bool mean_bound_pass = false;
    bool steps_sandwich_pass = false;  // mean_flight <= mean_steps <= mean_flight + 1
};

// E[T_walk] <= 2 c_d sqrt(n) + E[Z | Z <= 2 c_d sqrt(n)] E[N], verified on
// coupled runs with 3-sigma slack on the sample mean.
inline WalkMeanBoundReport walk_mean_bound_report(double alpha, double n, double c_d,
                                                  std::uint64_t trials, std::uint64_t seed,
                                                  unsigned workers = 0, double sigma = 1.0) {
    BatchParams params;
    params.alpha = alpha;
    params.n = n;
    params.c_d = c_d;
    params.trials = trials;
    params.seed = seed;
    params.sigma = sigma;
    params.workers = workers;
    const CoupledBatchResult batch = run_coupled_batch(params);
    validate_abandonment(batch.walk_fet);

    WalkMeanBoundReport report;
    report.mean_walk = batch.walk_fet.mean();
    report.mean_flight = batch.flight_fet.mean();
    double steps = 0.0;
    for (const ExitRecord& rec : batch.walk)
        if (!rec.abandoned) steps += double(rec.step_count);
    report.mean_steps = steps / double(batch.walk_fet.completed());

    const StepLaw law = params.law();
    const double two_r = 2.0 * params.radius();
    report.conditional_mean = law.conditional_mean_below(two_r);
    report.bound = two_r + report.conditional_mean * report.mean_steps;
    report.slack = 3.0 * batch.walk_fet.stddev() / std::sqrt(double(batch.walk_fet.completed()));
    report.ratio = report.bound / report.mean_walk;
    report.mean_bound_pass = report.mean_walk <= report.bound + report.slack;
    report.steps_sandwich_pass = report.mean_flight <= report.mean_steps &&
                                 report.mean_steps <= report.mean_flight + 1.0;
    return report;
}

// Exponential tail rate of the survival curve: OLS of ln S(t) on t over the
// window where the empirical survival lies in [s_lo, s_hi].
inline double tail_decay_rate(const EmpiricalFet& fet, double s_lo = 0.02, double s_hi = 0.5) {
    if (!(s_lo > 0.0 && s_lo < s_hi && s_hi < 1.0))
        throw std::invalid_argument("tail_decay_rate: need 0 < s_lo < s_hi < 1");
    std::vector<double> ts, ys;
    const std::uint64_t m = fet.completed();
    for (std::uint64_t i = 0; i < m;) {
        std::uint64_t j = i;
        while (j < m && fet.sorted_times[j] == fet.sorted_times[i]) ++j;
        const double survival = 1.0 - double(j) / double(m);
        if (survival >= s_lo && survival <= s_hi) {
            ts.push_back(fet.sorted_times[i]);
            ys.push_back(std::log(survival));
        }
        i = j;
    }
    if (ts.size() < 5) throw std::invalid_argument("tail_decay_rate: too few tail points");
    return -linear_fit(ts, ys).slope;
}

} // namespace levy

#endif
