#pragma once

// SVG figures of the tangent-circle configuration and its three degenerate
// readings. Output is deterministic: identical specs give identical bytes.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "zdgeom/wasan.hpp"

namespace zdgeom {

struct FigureSpec {
    int figure_id = 1;
    ZdScalar a = ZdScalar::exact(1); // ignored for figures 3-5
    ZdScalar b = ZdScalar::exact(1);
    int width = 600;
    int height = 450;
    int margin = 30;
};

/// World (y up) to screen (y down) mapping with a uniform scale.
struct ViewTransform {
    double scale = 1.0;
    double world_x0 = 0.0; // world x at screen x == offset_x
    double world_y0 = 0.0; // world y at screen y == offset_y
    double offset_x = 0.0;
    double offset_y = 0.0;

    double to_screen_x(double x) const { return offset_x + (x - world_x0) * scale; }
    double to_screen_y(double y) const { return offset_y - (y - world_y0) * scale; }
    double to_world_x(double sx) const { return world_x0 + (sx - offset_x) / scale; }
    double to_world_y(double sy) const { return world_y0 - (sy - offset_y) / scale; }
};

struct SvgDocument {
    std::string text;
    ViewTransform transform;
};

inline constexpr double point_circle_screen_radius = 3.0;

namespace detail::svg {

struct Curve {
    GCircle curve; // float mode
    std::string label;
    CurveKind kind;
    bool shared; // several named curves drawn as one
};

struct Box {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();

    void add_x(double x) { xmin = std::min(xmin, x), xmax = std::max(xmax, x); }
    void add_y(double y) { ymin = std::min(ymin, y), ymax = std::max(ymax, y); }
    bool has_x() const { return xmin <= xmax; }
    bool has_y() const { return ymin <= ymax; }
};

inline std::string num(double v) {
    if (std::abs(v) < 5e-4)
        v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

inline std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

// Proportional float quadruples, up to rounding.
inline bool coincident(const GCircle& a, const GCircle& b) {
    const double x[4] = {a.q().to_double(), a.g().to_double(), a.f().to_double(), a.c().to_double()};
    const double y[4] = {b.q().to_double(), b.g().to_double(), b.f().to_double(), b.c().to_double()};
    double nx = 0, ny = 0;
    for (int i = 0; i < 4; ++i)
        nx = std::max(nx, std::abs(x[i])), ny = std::max(ny, std::abs(y[i]));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(x[i] * y[j] - x[j] * y[i]) > 1e-12 * nx * ny)
                return false;
    return true;
}

inline bool is_horizontal(const GCircle& line) { return line.g().is_zero(); }
inline bool is_vertical(const GCircle& line) { return line.f().is_zero(); }

// Clips 2gx + 2fy + c = 0 to the box; nullopt when it misses.
inline std::optional<std::array<double, 4>> clip_line(const GCircle& line, const Box& box) {
    const double g = line.g().to_double(), f = line.f().to_double(), c = line.c().to_double();
    const double n2 = g * g + f * f;
    const double px = -c * g / (2 * n2), py = -c * f / (2 * n2); // foot of the origin
    const double dx = -f, dy = g;
    double t0 = -std::numeric_limits<double>::infinity(), t1 = std::numeric_limits<double>::infinity();
    const auto slab = [&](double p, double d, double lo, double hi) {
        if (d == 0.0)
            return p >= lo && p <= hi;
        double a = (lo - p) / d, b = (hi - p) / d;
        if (a > b)
            std::swap(a, b);
        t0 = std::max(t0, a);
        t1 = std::min(t1, b);
        return t0 <= t1;
    };
    if (!slab(px, dx, box.xmin, box.xmax) || !slab(py, dy, box.ymin, box.ymax))
        return std::nullopt;
    return std::array<double, 4>{px + t0 * dx, py + t0 * dy, px + t1 * dx, py + t1 * dy};
}

class Builder {
public:
    void add(const GCircle& curve, std::string label) {
        const GCircle k = curve.to_float();
        const CurveKind kind = classify(k);
        if (kind == CurveKind::Line) {
            for (auto& existing : curves_) {
                if (existing.kind == CurveKind::Line && coincident(existing.curve, k)) {
                    existing.label += " = " + label;
                    existing.shared = true;
                    return;
                }
            }
        }
        curves_.push_back({k, std::move(label), kind, false});
    }

    void add_text(double x, double y, std::string text) { notes_.push_back({x, y, std::move(text)}); }

    SvgDocument finish(const FigureSpec& spec, double unit) const {
        Box box;
        for (const auto& c : curves_) {
            if (c.kind == CurveKind::Line) {
                if (is_horizontal(c.curve))
                    box.add_y(-c.curve.c().to_double() / (2 * c.curve.f().to_double()));
                else if (is_vertical(c.curve))
                    box.add_x(-c.curve.c().to_double() / (2 * c.curve.g().to_double()));
                continue;
            }
            const Point p = center(c.curve);
            const double r = radius(c.curve).to_double();
            box.add_x(p.x.to_double() - r), box.add_x(p.x.to_double() + r);
            box.add_y(p.y.to_double() - r), box.add_y(p.y.to_double() + r);
        }
        if (!box.has_x())
            box.add_x(-unit), box.add_x(unit);
        if (!box.has_y())
            box.add_y(-unit), box.add_y(unit);
        if (box.xmax - box.xmin < 1e-9 * unit)
            box.add_x(box.xmin - unit), box.add_x(box.xmax + unit);
        if (box.ymax - box.ymin < 1e-9 * unit)
            box.add_y(box.ymin - unit), box.add_y(box.ymax + unit);

        // 10% overshoot so lines extend past the data.
        const double ox = 0.1 * (box.xmax - box.xmin), oy = 0.1 * (box.ymax - box.ymin);
        Box view{box.xmin - ox, box.xmax + ox, box.ymin - oy, box.ymax + oy};

        const double avail_w = spec.width - 2.0 * spec.margin, avail_h = spec.height - 2.0 * spec.margin;
        ViewTransform tf;
        tf.scale = std::min(avail_w / (view.xmax - view.xmin), avail_h / (view.ymax - view.ymin));
        tf.world_x0 = (view.xmin + view.xmax) / 2;
        tf.world_y0 = (view.ymin + view.ymax) / 2;
        tf.offset_x = spec.width / 2.0;
        tf.offset_y = spec.height / 2.0;

        std::string out;
        out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(spec.width) +
               "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"0 0 " + std::to_string(spec.width) +
               " " + std::to_string(spec.height) + "\">\n";
        out += "  <rect x=\"0\" y=\"0\" width=\"" + std::to_string(spec.width) + "\" height=\"" +
               std::to_string(spec.height) + "\" fill=\"white\"/>\n";

        bool has_point = false;
        for (const auto& c : curves_) {
            const std::string label = escape(c.shared ? c.label + " (shared)" : c.label);
            if (c.kind == CurveKind::Line) {
                const auto seg = clip_line(c.curve, view);
                if (!seg)
                    continue;
                std::string cls = "line";
                if (is_horizontal(c.curve))
                    cls += " horizontal";
                else if (is_vertical(c.curve))
                    cls += " vertical";
                out += "  <line class=\"" + cls + "\" x1=\"" + num(tf.to_screen_x((*seg)[0])) + "\" y1=\"" +
                       num(tf.to_screen_y((*seg)[1])) + "\" x2=\"" + num(tf.to_screen_x((*seg)[2])) + "\" y2=\"" +
                       num(tf.to_screen_y((*seg)[3])) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
                const double lx = is_vertical(c.curve) ? (*seg)[2] : (*seg)[0];
                const double ly = is_vertical(c.curve) ? (*seg)[3] : (*seg)[1];
                out += "  <text class=\"label\" x=\"" + num(tf.to_screen_x(lx) + 4) + "\" y=\"" +
                       num(tf.to_screen_y(ly) + (is_vertical(c.curve) ? 14 : -4)) +
                       "\" font-size=\"12\">" + label + "</text>\n";
                continue;
            }
            const Point p = center(c.curve);
            const double sx = tf.to_screen_x(p.x.to_double()), sy = tf.to_screen_y(p.y.to_double());
            if (c.kind == CurveKind::PointCircle) {
                has_point = true;
                out += "  <circle class=\"point-circle\" cx=\"" + num(sx) + "\" cy=\"" + num(sy) + "\" r=\"" +
                       num(point_circle_screen_radius) + "\" fill=\"black\"/>\n";
                out += "  <text class=\"label\" x=\"" + num(sx + 6) + "\" y=\"" + num(sy - 6) +
                       "\" font-size=\"12\">" + label + "</text>\n";
                continue;
            }
            const double r = radius(c.curve).to_double() * tf.scale;
            out += "  <circle class=\"proper-circle\" cx=\"" + num(sx) + "\" cy=\"" + num(sy) + "\" r=\"" + num(r) +
                   "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
            out += "  <text class=\"label\" x=\"" + num(sx) + "\" y=\"" + num(sy) +
                   "\" font-size=\"12\" text-anchor=\"middle\">" + label + "</text>\n";
        }
        for (const auto& n : notes_)
            out += "  <text class=\"note\" x=\"" + num(tf.to_screen_x(n.x) + 4) + "\" y=\"" +
                   num(tf.to_screen_y(n.y) + 14) + "\" font-size=\"10\">" + escape(n.text) + "</text>\n";
        if (has_point)
            out += "  <text class=\"legend\" x=\"" + num(spec.margin) + "\" y=\"" + num(spec.height - spec.margin / 3.0) +
                   "\" font-size=\"11\">&#9679; point circle (radius 0)</text>\n";
        out += "</svg>\n";
        return {out, tf};
    }

private:
    struct Note {
        double x, y;
        std::string text;
    };
    std::vector<Curve> curves_;
    std::vector<Note> notes_;
};

} // namespace detail::svg

inline void validate(const FigureSpec& spec) {
    if (spec.figure_id < 1 || spec.figure_id > 5)
        throw error(errc::invalid_argument, "figure must be 1..5");
    if (spec.b.sign() <= 0)
        throw error(errc::invalid_argument, "b must be positive");
    if (spec.figure_id <= 2 && spec.a.sign() <= 0)
        throw error(errc::invalid_argument, "figures 1 and 2 need a > 0");
    if (spec.width <= 0 || spec.height <= 0 || spec.margin < 0 || 2 * spec.margin >= std::min(spec.width, spec.height))
        throw error(errc::invalid_argument, "canvas too small for the margin");
}

/// Figures 1-2: the configuration for (a, b); figure 2 adds the coordinate
/// frame. Figures 3-5: beta, s, t and one degenerate (alpha, gamma) pair.
inline SvgDocument render_figure(const FigureSpec& spec) {
    validate(spec);
    const ZdScalar b = spec.b.to_float();
    detail::svg::Builder out;

    const auto frame = [&] {
        const ZdScalar zero = b.zero(), one = b.lift(1);
        out.add(GCircle(one, zero, -b, zero), "β");
        out.add(GCircle(zero, zero, one, zero), spec.figure_id == 2 ? "s (x-axis)" : "s");
        out.add(GCircle(zero, zero, one, -4 * b), "t");
    };

    if (spec.figure_id <= 2) {
        const WasanConfiguration cfg = build_configuration(spec.a.to_float(), b);
        out.add(cfg.alpha, "α");
        frame();
        out.add(cfg.gamma, "γ");
        if (spec.figure_id == 2) {
            out.add(GCircle(b.zero(), b.lift(1), b.zero(), b.zero()), "y-axis");
            for (const GCircle* k : {&cfg.alpha, &cfg.beta, &cfg.gamma}) {
                const Point p = center(*k);
                out.add_text(p.x.to_double(), p.y.to_double(),
                             "(" + p.x.to_decimal(4) + ", " + p.y.to_decimal(4) + ")");
            }
            out.add_text(0.0, 0.0, "O");
        }
    } else {
        frame();
        for (const DegenerateCase& d : degenerate_cases(b)) {
            if (d.figure != spec.figure_id)
                continue;
            out.add(d.alpha, "α");
            out.add(d.gamma, "γ");
        }
    }
    return out.finish(spec, b.to_double());
}

} // namespace zdgeom
