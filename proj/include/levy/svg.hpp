#ifndef LEVY_SVG_HPP
#define LEVY_SVG_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "levy/table_io.hpp"

namespace levy {

// Minimal SVG line-plot emitter (axes, ticks, polylines). Plots are a
// convenience output, not a tested artifact; CSVs carry the data.
class SvgPlot {
public:
    SvgPlot(std::string title, bool log_x = false, bool log_y = false)
        : title_(std::move(title)), log_x_(log_x), log_y_(log_y) {}

    void add_series(std::string label, std::vector<double> xs, std::vector<double> ys) {
        if (xs.size() != ys.size() || xs.empty())
            throw std::invalid_argument("SvgPlot: series must be non-empty and aligned");
        series_.push_back({std::move(label), std::move(xs), std::move(ys)});
    }

    std::string render() const {
        constexpr double w = 720, h = 480, ml = 70, mr = 160, mt = 40, mb = 50;
        static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                       "#ff7f0e", "#8c564b"};
        double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
        for (const auto& s : series_)
            for (std::size_t i = 0; i < s.xs.size(); ++i) {
                const double x = tx(s.xs[i]), y = ty(s.ys[i]);
                x_lo = std::min(x_lo, x); x_hi = std::max(x_hi, x);
                y_lo = std::min(y_lo, y); y_hi = std::max(y_hi, y);
            }
        if (!(x_hi > x_lo)) { x_lo -= 0.5; x_hi += 0.5; }
        if (!(y_hi > y_lo)) { y_lo -= 0.5; y_hi += 0.5; }

        auto px = [&](double x) { return ml + (tx(x) - x_lo) / (x_hi - x_lo) * (w - ml - mr); };
        auto py = [&](double y) { return h - mb - (ty(y) - y_lo) / (y_hi - y_lo) * (h - mt - mb); };

        std::string out;
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_number(w) +
               "\" height=\"" + format_number(h) + "\">\n";
        out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        out += "<text x=\"" + format_number(w / 2) + "\" y=\"24\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"16\">" + title_ + "</text>\n";
        out += axis_line(ml, h - mb, w - mr, h - mb);
        out += axis_line(ml, mt, ml, h - mb);
        for (int k = 0; k <= 4; ++k) {
            const double fx = x_lo + (x_hi - x_lo) * k / 4.0;
            const double fy = y_lo + (y_hi - y_lo) * k / 4.0;
            out += tick_label(ml + (w - ml - mr) * k / 4.0, h - mb + 18, inv_x(fx), "middle");
            out += tick_label(ml - 8, h - mb - (h - mt - mb) * k / 4.0 + 4, inv_y(fy), "end");
        }
        for (std::size_t s = 0; s < series_.size(); ++s) {
            const char* color = colors[s % 6];
            std::string pts;
            for (std::size_t i = 0; i < series_[s].xs.size(); ++i) {
                pts += format_number(px(series_[s].xs[i])) + "," +
                       format_number(py(series_[s].ys[i])) + " ";
            }
            out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
                   "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
            out += "<text x=\"" + format_number(w - mr + 10) + "\" y=\"" +
                   format_number(mt + 16.0 * double(s + 1)) + "\" font-family=\"sans-serif\" "
                   "font-size=\"12\" fill=\"" + color + "\">" + series_[s].label + "</text>\n";
        }
        out += "</svg>\n";
        return out;
    }

    void write(const std::string& path) const { write_text_file(path, render()); }

private:
    struct Series {
        std::string label;
        std::vector<double> xs, ys;
    };

    double tx(double x) const {
        if (!log_x_) return x;
        if (!(x > 0.0)) throw std::invalid_argument("SvgPlot: log axis needs positive x");
        return std::log10(x);
    }
    double ty(double y) const {
        if (!log_y_) return y;
        return std::log10(std::max(y, 1e-300));
    }
    double inv_x(double v) const { return log_x_ ? std::pow(10.0, v) : v; }
    double inv_y(double v) const { return log_y_ ? std::pow(10.0, v) : v; }

    static std::string axis_line(double x1, double y1, double x2, double y2) {
        return "<line x1=\"" + format_number(x1) + "\" y1=\"" + format_number(y1) + "\" x2=\"" +
               format_number(x2) + "\" y2=\"" + format_number(y2) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }

    static std::string tick_label(double x, double y, double value, const char* anchor) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3g", value);
        return "<text x=\"" + format_number(x) + "\" y=\"" + format_number(y) +
               "\" text-anchor=\"" + anchor + "\" font-family=\"sans-serif\" font-size=\"11\">" +
               buf + "</text>\n";
    }

    std::string title_;
    bool log_x_;
    bool log_y_;
    std::vector<Series> series_;
};

} // namespace levy

#endif
