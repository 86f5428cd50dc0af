#ifndef LEVY_EMPIRICAL_HPP
#define LEVY_EMPIRICAL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "levy/mobility.hpp"
#include "levy/parallel.hpp"
#include "levy/rng.hpp"
#include "levy/step_law.hpp"

namespace levy {

// Thrown when a batch fails a data-quality gate (e.g. too many abandoned
// trials). The CLI maps this to its validation exit code.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Empirical first-exit-time distribution. Abandoned (capped) trials are
// counted but never appear in sorted_times; censoring them into the sample
// would silently bias the upper quantiles.
struct EmpiricalFet {
    std::vector<double> sorted_times;
    std::uint64_t trials = 0;
    std::uint64_t abandoned = 0;

    std::uint64_t completed() const { return sorted_times.size(); }

    // Order statistic at index ceil(q * m), clamped to [1, m].
    double quantile(double q) const {
        if (sorted_times.empty()) throw std::invalid_argument("quantile: empty batch");
        if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("quantile: q outside [0,1]");
        const std::uint64_t m = sorted_times.size();
        std::uint64_t idx = static_cast<std::uint64_t>(std::ceil(q * double(m)));
        if (idx < 1) idx = 1;
        if (idx > m) idx = m;
        return sorted_times[idx - 1];
    }

    // Fraction of completed trials with exit time <= t.
    double cdf_at(double t) const {
        if (sorted_times.empty()) throw std::invalid_argument("cdf_at: empty batch");
        const auto it = std::upper_bound(sorted_times.begin(), sorted_times.end(), t);
        return double(it - sorted_times.begin()) / double(sorted_times.size());
    }

    double survival_at(double t) const { return 1.0 - cdf_at(t); }

    double mean() const {
        if (sorted_times.empty()) throw std::invalid_argument("mean: empty batch");
        double s = 0.0;
        for (double v : sorted_times) s += v;
        return s / double(sorted_times.size());
    }

    double stddev() const {
        const double m = mean();
        double s = 0.0;
        for (double v : sorted_times) s += (v - m) * (v - m);
        return sorted_times.size() > 1 ? std::sqrt(s / double(sorted_times.size() - 1)) : 0.0;
    }

    // Half-width of the DKW uniform confidence band: the true CDF lies
    // within +/- epsilon of the empirical one with probability 1 - delta.
    static double dkw_epsilon(std::uint64_t m, double delta) {
        if (m == 0 || !(delta > 0.0 && delta < 1.0))
            throw std::invalid_argument("dkw_epsilon: bad arguments");
        return std::sqrt(std::log(2.0 / delta) / (2.0 * double(m)));
    }
};

inline EmpiricalFet fet_from_records(const std::vector<ExitRecord>& records) {
    EmpiricalFet fet;
    fet.trials = records.size();
    fet.sorted_times.reserve(records.size());
    for (const ExitRecord& rec : records) {
        if (rec.abandoned)
            ++fet.abandoned;
        else
            fet.sorted_times.push_back(rec.exit_time);
    }
    std::sort(fet.sorted_times.begin(), fet.sorted_times.end());
    return fet;
}

// The estimator is order-free: merging two batches equals one batch of the
// union of their trials.
inline EmpiricalFet merge(const EmpiricalFet& a, const EmpiricalFet& b) {
    EmpiricalFet out;
    out.trials = a.trials + b.trials;
    out.abandoned = a.abandoned + b.abandoned;
    out.sorted_times.resize(a.sorted_times.size() + b.sorted_times.size());
    std::merge(a.sorted_times.begin(), a.sorted_times.end(), b.sorted_times.begin(),
               b.sorted_times.end(), out.sorted_times.begin());
    return out;
}

struct BatchParams {
    ModelKind kind = ModelKind::Flight;
    double alpha = 1.0;
    double n = 1 << 14;
    double c_d = 0.25;
    std::uint64_t trials = 20'000;
    std::uint64_t seed = 1;
    double sigma = 1.0;
    TrialLimits limits{};
    unsigned workers = 0;  // 0: resolve from environment / hardware

    StepLaw law() const { return StepLaw(alpha, n, sigma); }
    double radius() const { return c_d * std::sqrt(n); }
};

struct BatchResult {
    BatchParams params;
    std::vector<ExitRecord> records;  // by trial index
    EmpiricalFet fet;
};

inline void validate_params(const BatchParams& p) {
    if (p.trials < 1) throw std::invalid_argument("batch: trials must be >= 1");
    if (!(p.c_d > 0.0 && p.c_d < 0.5)) throw std::invalid_argument("batch: c_d outside (0, 1/2)");
}

namespace detail {

template <typename Trial>
BatchResult run_trials(const BatchParams& p, Trial&& trial) {
    validate_params(p);
    BatchResult out;
    out.params = p;
    out.records.resize(p.trials);
    const StepLaw law = p.law();
    const double radius = p.radius();
    parallel_for(p.trials, effective_workers(p.workers), [&](std::uint64_t i) {
        RandomStream stream(p.seed, i);
        out.records[i] = trial(law, radius, stream);
    });
    out.fet = fet_from_records(out.records);
    return out;
}

} // namespace detail

// Batch of independent first-exit trials; trial i uses the counter-based
// stream (seed, i), so the result is identical for any worker count.
inline BatchResult run_batch(const BatchParams& p) {
    return detail::run_trials(p, [&p](const StepLaw& law, double radius, RandomStream& stream) {
        return first_exit(p.kind, law, radius, stream, p.limits);
    });
}

// Batch of 1-D projected exits T_x(radius) under Flight dynamics.
inline BatchResult run_projected_batch(const BatchParams& p) {
    return detail::run_trials(p, [&p](const StepLaw& law, double radius, RandomStream& stream) {
        return projected_first_exit(law, radius, stream, p.limits);
    });
}

struct CoupledBatchResult {
    BatchParams params;
    std::vector<ExitRecord> flight;  // by trial index
    std::vector<ExitRecord> walk;
    EmpiricalFet flight_fet;
    EmpiricalFet walk_fet;
};

// Flight/Walk pairs replayed on identical streams (see coupled_first_exit).
inline CoupledBatchResult run_coupled_batch(const BatchParams& p) {
    validate_params(p);
    CoupledBatchResult out;
    out.params = p;
    out.flight.resize(p.trials);
    out.walk.resize(p.trials);
    const StepLaw law = p.law();
    const double radius = p.radius();
    parallel_for(p.trials, effective_workers(p.workers), [&](std::uint64_t i) {
        RandomStream stream(p.seed, i);
        const auto [flight, walk] = coupled_first_exit(law, radius, stream, p.limits);
        out.flight[i] = flight;
        out.walk[i] = walk;
    });
    out.flight_fet = fet_from_records(out.flight);
    out.walk_fet = fet_from_records(out.walk);
    return out;
}

// Data-quality gate: a batch that abandons more than 0.1% of its trials is
// rejected rather than reported with invisibly censored upper quantiles.
inline void validate_abandonment(const EmpiricalFet& fet) {
    if (fet.trials == 0) throw ValidationError("batch has no trials");
    if (double(fet.abandoned) > 0.001 * double(fet.trials))
        throw ValidationError("batch abandoned more than 0.1% of trials (step cap too low "
                              "or pathological parameters)");
}

} // namespace levy

#endif
