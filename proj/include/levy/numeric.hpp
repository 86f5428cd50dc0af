#ifndef LEVY_NUMERIC_HPP
#define LEVY_NUMERIC_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace levy {

namespace detail {

template <typename F>
double simpson_estimate(F&& f, double a, double fa, double b, double fb, double& fm) {
    const double m = 0.5 * (a + b);
    fm = f(m);
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_simpson_rec(F&& f, double a, double fa, double b, double fb,
                            double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    double flm, frm;
    const double left = simpson_estimate(f, a, fa, m, fm, flm);
    const double right = simpson_estimate(f, m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

} // namespace detail

// Adaptive Simpson quadrature with absolute tolerance. The interval is first
// split into uniform panels so that localized integrands are not missed by
// the top-level estimate.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol = 1e-10,
                        int panels = 8, int max_depth = 80) {
    if (!(b >= a)) throw std::invalid_argument("adaptive_simpson: bad interval");
    if (a == b) return 0.0;
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double pa = a + i * h;
        const double pb = (i == panels - 1) ? b : pa + h;
        const double fa = f(pa);
        const double fb = f(pb);
        double fm;
        const double whole = detail::simpson_estimate(f, pa, fa, pb, fb, fm);
        total += detail::adaptive_simpson_rec(f, pa, fa, pb, fb, fm, whole,
                                              abs_tol / panels, max_depth);
    }
    return total;
}

// Inverse standard normal CDF (Acklam's rational approximation, |rel err|
// below 1.2e-9). Callers needing full double precision polish the result
// with Newton steps against std::erf.
inline double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("normal_quantile: p outside (0,1)");
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00, 2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double r_squared = 1.0;
};

// Ordinary least squares y = slope*x + intercept. Standard error of the
// slope uses the unbiased residual variance (m-2 degrees of freedom).
inline LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    const std::size_t m = x.size();
    if (m != y.size() || m < 2) throw std::invalid_argument("linear_fit: need >= 2 points");
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx <= 0.0) throw std::invalid_argument("linear_fit: degenerate x values");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ssr = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double e = y[i] - (fit.slope * x[i] + fit.intercept);
        ssr += e * e;
    }
    fit.slope_stderr = (m > 2) ? std::sqrt(ssr / double(m - 2) / sxx) : 0.0;
    fit.r_squared = (syy > 0.0) ? 1.0 - ssr / syy : 1.0;
    return fit;
}

inline std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
    if (count < 2 || !(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("log_spaced: bad grid");
    std::vector<double> g(count);
    const double step = (std::log(hi) - std::log(lo)) / double(count - 1);
    for (std::size_t i = 0; i < count; ++i) g[i] = std::exp(std::log(lo) + step * double(i));
    g.front() = lo;
    g.back() = hi;
    return g;
}

} // namespace levy

#endif
