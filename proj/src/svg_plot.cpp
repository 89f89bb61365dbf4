#include "quadlip/io/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "quadlip/io/format.hpp"

namespace quadlip::io {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 64.0, kRight = 18.0, kTop = 34.0, kBottom = 50.0;

std::string fmt(double v) { return format_double(v, 6); }

struct Curve {
    std::string label;
    std::string color;
    std::string css_class;
    std::vector<std::pair<double, double>> pts;
};

struct HLine {
    double y;
    std::string label;
};

struct Figure {
    std::string title, xlabel, ylabel;
    std::vector<Curve> curves;
    std::vector<HLine> hlines;
};

struct Mapper {
    double x_min, x_max, y_min, y_max;

    double map_x(double x) const {
        return kLeft + (x - x_min) / (x_max - x_min) * (kWidth - kLeft - kRight);
    }
    double map_y(double y) const {
        // SVG y grows downward
        return kTop + (1.0 - (y - y_min) / (y_max - y_min)) * (kHeight - kTop - kBottom);
    }
};

Mapper fit_mapper(const Figure& fig) {
    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const auto& c : fig.curves)
        for (const auto& [x, y] : c.pts) {
            if (std::isfinite(x)) { x_lo = std::min(x_lo, x); x_hi = std::max(x_hi, x); }
            if (std::isfinite(y)) { y_lo = std::min(y_lo, y); y_hi = std::max(y_hi, y); }
        }
    for (const auto& h : fig.hlines) { y_lo = std::min(y_lo, h.y); y_hi = std::max(y_hi, h.y); }
    if (!std::isfinite(x_lo) || !std::isfinite(y_lo))
        throw std::invalid_argument("plot: no finite data points");
    auto pad = [](double& lo, double& hi) {
        if (hi - lo < 1e-12) { lo -= 0.5; hi += 0.5; }
        const double p = 0.05 * (hi - lo);
        lo -= p;
        hi += p;
    };
    pad(x_lo, x_hi);
    pad(y_lo, y_hi);
    return {x_lo, x_hi, y_lo, y_hi};
}

void emit_axes(std::string& svg, const Figure& fig, const Mapper& m) {
    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kTop, y1 = kHeight - kBottom;
    svg += "  <rect x=\"" + fmt(x0) + "\" y=\"" + fmt(y0) + "\" width=\"" + fmt(x1 - x0) +
           "\" height=\"" + fmt(y1 - y0) + "\" fill=\"none\" stroke=\"#000\"/>\n";

    constexpr int n_ticks = 5;
    svg += "  <g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (int i = 0; i <= n_ticks; ++i) {
        const double f = double(i) / n_ticks;
        const double vx = m.x_min + f * (m.x_max - m.x_min);
        const double sx = m.map_x(vx);
        svg += "    <line x1=\"" + fmt(sx) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(sx) +
               "\" y2=\"" + fmt(y1 + 5) + "\" stroke=\"#000\"/>\n";
        svg += "    <text x=\"" + fmt(sx) + "\" y=\"" + fmt(y1 + 18) +
               "\" text-anchor=\"middle\">" + format_double(vx, 4) + "</text>\n";

        const double vy = m.y_min + f * (m.y_max - m.y_min);
        const double sy = m.map_y(vy);
        svg += "    <line x1=\"" + fmt(x0 - 5) + "\" y1=\"" + fmt(sy) + "\" x2=\"" + fmt(x0) +
               "\" y2=\"" + fmt(sy) + "\" stroke=\"#000\"/>\n";
        svg += "    <text x=\"" + fmt(x0 - 8) + "\" y=\"" + fmt(sy + 3.5) +
               "\" text-anchor=\"end\">" + format_double(vy, 4) + "</text>\n";
    }
    svg += "  </g>\n";

    svg += "  <text x=\"" + fmt((x0 + x1) / 2) + "\" y=\"" + fmt(kHeight - 10) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + fig.xlabel +
           "</text>\n";
    svg += "  <text x=\"16\" y=\"" + fmt((y0 + y1) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90,16," +
           fmt((y0 + y1) / 2) + ")\">" + fig.ylabel + "</text>\n";
    svg += "  <text x=\"" + fmt((x0 + x1) / 2) + "\" y=\"20\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"14\" font-weight=\"bold\">" +
           fig.title + "</text>\n";
}

void emit_legend(std::string& svg, const Figure& fig, const Mapper& m) {
    double ly = kTop + 14.0;
    const double lx = m.map_x(m.x_max) - 150.0;
    svg += "  <g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (const auto& c : fig.curves) {
        svg += "    <line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly - 3.5) + "\" x2=\"" +
               fmt(lx + 22) + "\" y2=\"" + fmt(ly - 3.5) + "\" stroke=\"" + c.color +
               "\" stroke-width=\"2\"/>\n";
        svg += "    <text x=\"" + fmt(lx + 28) + "\" y=\"" + fmt(ly) + "\">" + c.label +
               "</text>\n";
        ly += 16.0;
    }
    svg += "  </g>\n";
}

std::string render_figure(const Figure& fig) {
    if (fig.curves.empty()) throw std::invalid_argument("plot: nothing to draw");
    const Mapper m = fit_mapper(fig);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
           fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    emit_axes(svg, fig, m);

    for (const auto& h : fig.hlines) {
        const double sy = m.map_y(h.y);
        svg += "  <line class=\"band\" x1=\"" + fmt(m.map_x(m.x_min)) + "\" y1=\"" + fmt(sy) +
               "\" x2=\"" + fmt(m.map_x(m.x_max)) + "\" y2=\"" + fmt(sy) +
               "\" stroke=\"#999\" stroke-dasharray=\"5,4\"/>\n";
        svg += "  <text x=\"" + fmt(m.map_x(m.x_min) + 4) + "\" y=\"" + fmt(sy - 4) +
               "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#666\">" + h.label +
               "</text>\n";
    }

    for (const auto& c : fig.curves) {
        svg += "  <polyline class=\"" + c.css_class + "\" fill=\"none\" stroke=\"" + c.color +
               "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& [x, y] : c.pts) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            if (!first) svg += ' ';
            svg += fmt(m.map_x(x)) + "," + fmt(m.map_y(y));
            first = false;
        }
        svg += "\"/>\n";
    }
    emit_legend(svg, fig, m);
    svg += "</svg>\n";
    return svg;
}

constexpr const char* kComColors[3] = {"#1f77b4", "#d62728", "#2ca02c"};
constexpr const char* kCorColors[4] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"};

Figure com_figure(const std::vector<GaitSample<double>>& samples, PlotKind kind) {
    Figure fig;
    const char* labels[3] = {"CoM fore", "CoM hind", "CoM quad"};
    for (int i = 0; i < 3; ++i) fig.curves.push_back({labels[i], kComColors[i], "com", {}});
    for (const auto& s : samples) {
        const Vec3<double>* coms[3] = {&s.com_fore, &s.com_hind, &s.com_quad};
        for (int i = 0; i < 3; ++i) {
            const auto& p = *coms[i];
            switch (kind) {
                case PlotKind::Transverse: fig.curves[i].pts.emplace_back(p.x(), p.y()); break;
                case PlotKind::Frontal: fig.curves[i].pts.emplace_back(p.y(), p.z()); break;
                default: fig.curves[i].pts.emplace_back(p.x(), p.z()); break;
            }
        }
    }
    switch (kind) {
        case PlotKind::Transverse:
            fig.title = "CoM trajectories, transverse plane";
            fig.xlabel = "x [m]";
            fig.ylabel = "y [m]";
            break;
        case PlotKind::Frontal:
            fig.title = "CoM trajectories, frontal plane";
            fig.xlabel = "y [m]";
            fig.ylabel = "z [m]";
            break;
        default:
            fig.title = "CoM trajectories, sagittal plane";
            fig.xlabel = "x [m]";
            fig.ylabel = "z [m]";
            break;
    }
    return fig;
}

Figure cor_figure(const std::vector<GaitSample<double>>& samples) {
    Figure fig;
    fig.title = "Anteroposterior CoR trajectories";
    fig.xlabel = "t [s]";
    fig.ylabel = "x [m]";
    for (Foot f : kAllFeet)
        fig.curves.push_back({foot_name(f), kCorColors[foot_index(f)], "cor", {}});
    for (const auto& s : samples)
        for (Foot f : kAllFeet)
            fig.curves[foot_index(f)].pts.emplace_back(s.t, s.foot[foot_index(f)].x());
    return fig;
}

}  // namespace

PlotKind parse_plot_kind(std::string_view name) {
    if (name == "transverse") return PlotKind::Transverse;
    if (name == "frontal") return PlotKind::Frontal;
    if (name == "sagittal") return PlotKind::Sagittal;
    if (name == "cor-x-vs-t") return PlotKind::CorXVsTime;
    if (name == "sweep-strategy") return PlotKind::SweepStrategy;
    if (name == "sweep-froude") return PlotKind::SweepFroude;
    throw std::invalid_argument("unknown plot kind '" + std::string(name) +
                                "' (expected transverse, frontal, sagittal, cor-x-vs-t, "
                                "sweep-strategy or sweep-froude)");
}

const char* plot_kind_name(PlotKind kind) {
    switch (kind) {
        case PlotKind::Transverse: return "transverse";
        case PlotKind::Frontal: return "frontal";
        case PlotKind::Sagittal: return "sagittal";
        case PlotKind::CorXVsTime: return "cor-x-vs-t";
        case PlotKind::SweepStrategy: return "sweep-strategy";
        default: return "sweep-froude";
    }
}

bool plot_wants_samples(PlotKind kind) {
    return kind == PlotKind::Transverse || kind == PlotKind::Frontal ||
           kind == PlotKind::Sagittal || kind == PlotKind::CorXVsTime;
}

std::string render_plot(const std::vector<GaitSample<double>>& samples, PlotKind kind) {
    if (!plot_wants_samples(kind))
        throw std::invalid_argument(std::string("plot kind '") + plot_kind_name(kind) +
                                    "' is drawn from a sweep table, not a trajectory");
    if (samples.empty()) throw std::invalid_argument("plot: empty sample series");
    return render_figure(kind == PlotKind::CorXVsTime ? cor_figure(samples)
                                                      : com_figure(samples, kind));
}

std::string render_plot(const std::vector<SweepRow<double>>& rows, PlotKind kind) {
    if (plot_wants_samples(kind))
        throw std::invalid_argument(std::string("plot kind '") + plot_kind_name(kind) +
                                    "' is drawn from a trajectory, not a sweep table");
    if (rows.empty()) throw std::invalid_argument("plot: empty sweep table");

    Figure fig;
    fig.xlabel = "v_w [m/s]";
    if (kind == PlotKind::SweepStrategy) {
        fig.title = "Step strategies versus velocity";
        fig.ylabel = "distance [m]";
        fig.curves.push_back({"step length", "#1f77b4", "curve", {}});
        fig.curves.push_back({"step width", "#d62728", "curve", {}});
        for (const auto& r : rows) {
            fig.curves[0].pts.emplace_back(r.velocity, r.step_length);
            fig.curves[1].pts.emplace_back(r.velocity, r.step_width);
        }
    } else {
        fig.title = "Froude number versus velocity";
        fig.ylabel = "Fn [-]";
        fig.curves.push_back({"Fn = v/sqrt(gl)", "#1f77b4", "curve", {}});
        fig.curves.push_back({"Fn = v^2/(gl)", "#d62728", "curve", {}});
        for (const auto& r : rows) {
            fig.curves[0].pts.emplace_back(r.velocity, r.froude_sqrt);
            fig.curves[1].pts.emplace_back(r.velocity, r.froude_squared);
        }
        fig.hlines.push_back({0.10, "walk band"});
        fig.hlines.push_back({0.40, "gait/canter band"});
    }
    return render_figure(fig);
}

void write_plot(const std::vector<GaitSample<double>>& samples, PlotKind kind,
                const std::string& path) {
    write_file(path, render_plot(samples, kind));
}

void write_plot(const std::vector<SweepRow<double>>& rows, PlotKind kind,
                const std::string& path) {
    write_file(path, render_plot(rows, kind));
}

}  // namespace quadlip::io
