#ifndef LEVY_MOBILITY_HPP
#define LEVY_MOBILITY_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "levy/rng.hpp"
#include "levy/step_law.hpp"

namespace levy {

// Flight: every step takes one time unit. Walk: unit velocity, a step of
// length Z takes time Z. Both share the step-size law and uniform headings,
// so a walk's embedded chain replayed on the same stream is the flight.
enum class ModelKind { Flight, Walk };

inline const char* to_string(ModelKind kind) {
    return kind == ModelKind::Flight ? "flight" : "walk";
}

struct ExitRecord {
    double exit_time = 0.0;        // T, first time displacement reached the radius
    std::uint64_t step_count = 0;  // N, steps begun up to and including the exiting step
    double truncated_last = 0.0;   // walk only: distance traveled inside the final step
    double exit_time_x = 0.0;      // flight only (optional): projected |x| exit time
    bool abandoned = false;        // step cap hit before exit; excluded from statistics
};

struct TrialLimits {
    std::uint64_t max_steps = 1'000'000'000ULL;
};

struct StepDraw {
    double length;
    double angle;
};

// One mobility step: length from the law, heading uniform on [0, 2pi).
// The length uniform is always consumed before the angle uniform, which
// pins the stream layout for replay and coupling.
inline StepDraw draw_step(RandomStream& stream, const StepLaw& law) {
    const double z = law.sample(stream.next_unit());
    const double theta = 2.0 * M_PI * stream.next_unit();
    return {z, theta};
}

namespace detail {

inline void require_radius(const StepLaw& law, double radius) {
    if (!(radius > 0.0 && radius < law.support_max() / 2.0))
        throw std::invalid_argument("first_exit: radius must lie in (0, sqrt(n)/2)");
}

// Distance along the unit heading (ux,uy) from (x,y), strictly inside the
// circle of radius r, to the crossing point. The quadratic t^2 + 2bt + c has
// exactly one positive root when c < 0; anything else is a logic error.
inline double crossing_distance(double x, double y, double ux, double uy,
                                double r_sq, double step_len) {
    if (x == 0.0 && y == 0.0) return std::sqrt(r_sq);
    const double b = x * ux + y * uy;
    const double c = x * x + y * y - r_sq;
    if (!(c < 0.0)) throw std::logic_error("crossing_distance: start point not inside the disc");
    const double disc = b * b - c;
    const double t = -b + std::sqrt(disc);
    if (!(t > 0.0)) throw std::logic_error("crossing_distance: no positive root");
    return std::min(t, step_len);
}

} // namespace detail

// First exit of the disc of the given radius around the trial's start point.
// Flight exit is observed at step ends only (integer times); Walk exit is
// resolved exactly inside the crossing step. With track_projected set, a
// Flight trial also runs until |x displacement| >= radius and records that
// time in exit_time_x.
inline ExitRecord first_exit(ModelKind kind, const StepLaw& law, double radius,
                             RandomStream& stream, TrialLimits limits = {},
                             bool track_projected = false) {
    detail::require_radius(law, radius);
    const double r_sq = radius * radius;
    ExitRecord rec;
    double x = 0.0, y = 0.0;

    if (kind == ModelKind::Flight) {
        bool need_2d = true;
        bool need_x = track_projected;
        std::uint64_t t = 0;
        while (need_2d || need_x) {
            if (t >= limits.max_steps) {
                rec.step_count = t;
                rec.abandoned = true;
                return rec;
            }
            const StepDraw s = draw_step(stream, law);
            x += s.length * std::cos(s.angle);
            y += s.length * std::sin(s.angle);
            ++t;
            if (need_2d && x * x + y * y >= r_sq) {
                rec.exit_time = static_cast<double>(t);
                rec.step_count = t;
                need_2d = false;
            }
            if (need_x && std::abs(x) >= radius) {
                rec.exit_time_x = static_cast<double>(t);
                need_x = false;
            }
        }
        return rec;
    }

    double elapsed = 0.0;
    std::uint64_t t = 0;
    for (;;) {
        if (t >= limits.max_steps) {
            rec.step_count = t;
            rec.abandoned = true;
            return rec;
        }
        const StepDraw s = draw_step(stream, law);
        const double ux = std::cos(s.angle);
        const double uy = std::sin(s.angle);
        ++t;
        const double nx = x + s.length * ux;
        const double ny = y + s.length * uy;
        if (nx * nx + ny * ny >= r_sq) {
            const double tp = detail::crossing_distance(x, y, ux, uy, r_sq, s.length);
            rec.exit_time = elapsed + tp;
            rec.step_count = t;
            rec.truncated_last = tp;
            return rec;
        }
        x = nx;
        y = ny;
        elapsed += s.length;
    }
}

// Flight and Walk driven by the identical (Z_i, theta_i) sequence. The
// embedded chains coincide, so walk.step_count == flight.exit_time always,
// and walk.exit_time >= flight.exit_time - 1 because every step has Z >= 1.
inline std::pair<ExitRecord, ExitRecord> coupled_first_exit(const StepLaw& law, double radius,
                                                            RandomStream& stream,
                                                            TrialLimits limits = {}) {
    detail::require_radius(law, radius);
    const double r_sq = radius * radius;
    double x = 0.0, y = 0.0, traveled = 0.0;
    std::uint64_t i = 0;
    for (;;) {
        if (i >= limits.max_steps) {
            ExitRecord rec;
            rec.step_count = i;
            rec.abandoned = true;
            return {rec, rec};
        }
        const StepDraw s = draw_step(stream, law);
        const double ux = std::cos(s.angle);
        const double uy = std::sin(s.angle);
        ++i;
        const double nx = x + s.length * ux;
        const double ny = y + s.length * uy;
        if (nx * nx + ny * ny >= r_sq) {
            ExitRecord flight;
            flight.exit_time = static_cast<double>(i);
            flight.step_count = i;
            ExitRecord walk;
            const double tp = detail::crossing_distance(x, y, ux, uy, r_sq, s.length);
            walk.exit_time = traveled + tp;
            walk.step_count = i;
            walk.truncated_last = tp;
            return {flight, walk};
        }
        x = nx;
        y = ny;
        traveled += s.length;
    }
}

// First integer t with |sum_{i<=t} Z_i cos(theta_i)| >= radius. Consumes the
// same two uniforms per step as the 2-D engines.
inline ExitRecord projected_first_exit(const StepLaw& law, double radius, RandomStream& stream,
                                       TrialLimits limits = {}) {
    detail::require_radius(law, radius);
    ExitRecord rec;
    double x = 0.0;
    std::uint64_t t = 0;
    for (;;) {
        if (t >= limits.max_steps) {
            rec.step_count = t;
            rec.abandoned = true;
            return rec;
        }
        const StepDraw s = draw_step(stream, law);
        x += s.length * std::cos(s.angle);
        ++t;
        if (std::abs(x) >= radius) {
            rec.exit_time = static_cast<double>(t);
            rec.step_count = t;
            return rec;
        }
    }
}

// Censored projected exit used by the tail-bound checks: returns the exit
// step if it happens within `horizon` steps, otherwise horizon + 1.
inline std::uint64_t projected_exit_within(const StepLaw& law, double radius,
                                           std::uint64_t horizon, RandomStream& stream) {
    detail::require_radius(law, radius);
    double x = 0.0;
    for (std::uint64_t t = 1; t <= horizon; ++t) {
        const StepDraw s = draw_step(stream, law);
        x += s.length * std::cos(s.angle);
        if (std::abs(x) >= radius) return t;
    }
    return horizon + 1;
}

// Signed x displacement after exactly t steps.
inline double projected_displacement(const StepLaw& law, std::uint64_t t, RandomStream& stream) {
    double x = 0.0;
    for (std::uint64_t i = 0; i < t; ++i) {
        const StepDraw s = draw_step(stream, law);
        x += s.length * std::cos(s.angle);
    }
    return x;
}

} // namespace levy

#endif
