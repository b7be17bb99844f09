#pragma once

// Command-line front end. Lives in a header so the test suites can drive
// the exact same code path in-process with captured streams.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zdgeom/zdgeom.hpp"

namespace zdgeom::cli {

struct Options {
    bool exact = false;
    double tol = 1e-9;

    std::string n, d, angle;
    std::string coeffs, c1, c2;
    std::string a = "1", b = "1";
    int form = 0;
    std::string a_min = "0.1", a_max = "10";
    int steps = 10;
    std::string out_path;
    int figure = 1;
    int width = 600, height = 450;

    Mode mode() const { return exact ? Mode::Exact : Mode::Float; }
};

namespace detail {

inline void print_scalar(std::ostream& out, const std::string& name, const ZdScalar& v) {
    out << name << " = " << v.to_decimal(17);
    if (v.is_exact())
        out << "  (exact: " << v.to_string() << ")";
    out << "\n";
}

inline void print_curve(std::ostream& out, const std::string& name, const GCircle& k) {
    const CurveKind kind = classify(k);
    out << name << " = " << k.to_string() << "  " << to_string(kind);
    if (kind != CurveKind::EmptyCurve) {
        out << "  radius " << radius(k).to_string();
        if (kind != CurveKind::Line) {
            const Point p = center(k);
            out << "  center (" << p.x.to_string() << ", " << p.y.to_string() << ")";
        }
    }
    out << "\n";
}

inline int cmd_zd_div(const Options& o, std::ostream& out) {
    const ZdScalar n = parse_scalar(o.n, o.mode()), d = parse_scalar(o.d, o.mode());
    print_scalar(out, "zd_div(" + o.n + ", " + o.d + ")", zd_div(n, d));
    return 0;
}

inline int cmd_zd_tan(const Options& o, std::ostream& out) {
    ZdScalar v = zd_tan(parse_pi_angle(o.angle));
    if (!o.exact && v.is_exact())
        v = v.to_float();
    print_scalar(out, "zd_tan(" + o.angle + ")", v);
    return 0;
}

inline int cmd_classify(const Options& o, std::ostream& out) {
    out << to_string(classify(GCircle::parse(o.coeffs, o.mode()))) << "\n";
    return 0;
}

inline int cmd_radius(const Options& o, std::ostream& out) {
    print_scalar(out, "radius", radius(GCircle::parse(o.coeffs, o.mode())));
    return 0;
}

inline int cmd_center(const Options& o, std::ostream& out) {
    const Point p = center(GCircle::parse(o.coeffs, o.mode()));
    print_scalar(out, "x", p.x);
    print_scalar(out, "y", p.y);
    return 0;
}

inline int cmd_tangency(const Options& o, std::ostream& out) {
    const GCircle c1 = GCircle::parse(o.c1, o.mode()), c2 = GCircle::parse(o.c2, o.mode());
    out << to_string(tangency(c1, c2, o.tol)) << "\n";
    return 0;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    const ZdScalar a = parse_scalar(o.a, o.mode()), b = parse_scalar(o.b, o.mode());
    const WasanConfiguration cfg = build_configuration(a, b);
    print_scalar(out, "a", cfg.a);
    print_scalar(out, "b", cfg.b);
    print_scalar(out, "c", cfg.c);
    print_curve(out, "alpha", cfg.alpha);
    print_curve(out, "beta", cfg.beta);
    print_curve(out, "gamma", cfg.gamma);
    const TangencyReport rep = verify_configuration(cfg, o.tol);
    for (const auto& [name, v] : rep.named())
        print_scalar(out, "residual " + name, v);
    print_scalar(out, "max_abs", rep.max_abs);
    out << (rep.passed() ? "PASS" : "FAIL") << " (tol " << o.tol << ")\n";
    return rep.passed() ? 0 : 1;
}

inline int cmd_degenerate(const Options& o, std::ostream& out) {
    const ZdScalar b = parse_scalar(o.b, o.mode());
    bool ok = gamma_radius(b.zero(), b).is_zero();
    print_scalar(out, "gamma_radius(0, b)", gamma_radius(b.zero(), b));
    for (const DegenerateCase& d : degenerate_cases(b)) {
        if (o.form != 0 && static_cast<int>(d.form) != o.form)
            continue;
        out << "figure " << d.figure << ", form " << static_cast<int>(d.form) << ": " << d.label << "\n";
        print_curve(out, "  alpha", d.alpha);
        print_curve(out, "  gamma", d.gamma);
        ok = ok && radius(d.alpha).is_zero() && radius(d.gamma).is_zero();
    }
    out << (ok ? "PASS" : "FAIL") << ": every degenerate curve has radius 0\n";
    return ok ? 0 : 1;
}

inline int cmd_sweep(const Options& o, std::ostream& out) {
    if (o.steps < 1)
        throw error(errc::invalid_argument, "--steps must be at least 1");
    const double lo = parse_scalar(o.a_min, Mode::Float).to_double();
    const double hi = parse_scalar(o.a_max, Mode::Float).to_double();
    std::vector<double> as;
    for (int i = 0; i < o.steps; ++i)
        as.push_back(o.steps == 1 ? lo : lo + (hi - lo) * i / (o.steps - 1));
    const ZdScalar b = parse_scalar(o.b, Mode::Float);
    const std::vector<SweepRow> rows = sweep(b, as);

    std::ostringstream tsv;
    tsv << "a\tc_closed\tc_oracle\tmax_residual\n";
    tsv.precision(17);
    bool ok = true;
    for (const SweepRow& r : rows) {
        tsv << r.a << '\t' << r.c_closed << '\t' << r.c_oracle << '\t' << r.max_residual << '\n';
        ok = ok && std::abs(r.c_closed - r.c_oracle) <= 1e-9 * std::max(1.0, r.c_closed) &&
             r.max_residual <= o.tol * std::max(1.0, r.a + b.to_double() + r.c_closed);
    }
    if (o.out_path.empty()) {
        out << tsv.str();
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file)
            throw error(errc::invalid_argument, "cannot write " + o.out_path);
        file << tsv.str();
        out << "wrote " << rows.size() << " rows to " << o.out_path << "\n";
    }
    return ok ? 0 : 1;
}

inline int cmd_oracle(const Options& o, std::ostream& out) {
    const ZdScalar a = parse_scalar(o.a, Mode::Float), b = parse_scalar(o.b, Mode::Float);
    const OracleResult r = oracle_solve_c(a, b, 1e-12);
    const ZdScalar closed = gamma_radius(a, b);
    print_scalar(out, "c_oracle", r.root);
    out << "iterations = " << r.iterations << "\n";
    out << "bracket_doublings = " << r.doublings << "\n";
    print_scalar(out, "c_closed", closed);
    const bool ok = std::abs(r.root.to_double() - closed.to_double()) <= 1e-9 * std::max(1.0, closed.to_double());
    out << (ok ? "PASS" : "FAIL") << ": oracle agrees with b^2/(4a)\n";
    return ok ? 0 : 1;
}

inline int cmd_render(const Options& o, std::ostream& out) {
    FigureSpec spec;
    spec.figure_id = o.figure;
    spec.a = parse_scalar(o.a, Mode::Float);
    spec.b = parse_scalar(o.b, Mode::Float);
    spec.width = o.width;
    spec.height = o.height;
    const SvgDocument doc = render_figure(spec);
    if (o.out_path.empty()) {
        out << doc.text;
        return 0;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file)
        throw error(errc::invalid_argument, "cannot write " + o.out_path);
    file << doc.text;
    return 0;
}

} // namespace detail

/// Runs the CLI; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Generalized circles with total division (x/0 = 0)", "zdgeom"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--exact", o.exact, "Exact rational / quadratic-surd arithmetic");
    app.add_option("--tol", o.tol, "Tolerance for tangency checks")->capture_default_str();

    int (*selected)(const Options&, std::ostream&) = nullptr;
    const auto bind = [&](CLI::App* sub, int (*fn)(const Options&, std::ostream&)) {
        sub->callback([&selected, fn] { selected = fn; });
    };

    auto* zd = app.add_subcommand("zd", "Total-division scalar arithmetic")->require_subcommand(1);
    auto* div = zd->add_subcommand("div", "n / d with x/0 = 0");
    div->add_option("n", o.n)->required();
    div->add_option("d", o.d)->required();
    bind(div, detail::cmd_zd_div);
    auto* tan = zd->add_subcommand("tan", "tan of a rational multiple of pi, e.g. 1/2pi");
    tan->add_option("angle", o.angle)->required();
    bind(tan, detail::cmd_zd_tan);

    auto* gc = app.add_subcommand("gcircle", "Generalized circle q(x^2+y^2)+2gx+2fy+c=0")->require_subcommand(1);
    for (auto [name, fn] : {std::pair{"classify", detail::cmd_classify}, std::pair{"radius", detail::cmd_radius},
                            std::pair{"center", detail::cmd_center}}) {
        auto* sub = gc->add_subcommand(name);
        sub->add_option("--coeffs", o.coeffs, "q,g,f,c")->required();
        bind(sub, fn);
    }
    auto* tg = gc->add_subcommand("tangency");
    tg->add_option("--c1", o.c1, "q,g,f,c")->required();
    tg->add_option("--c2", o.c2, "q,g,f,c")->required();
    bind(tg, detail::cmd_tangency);

    auto* ws = app.add_subcommand("wasan", "Three tangent circles between parallel lines")->require_subcommand(1);
    auto* verify = ws->add_subcommand("verify", "Build the configuration and check its five tangencies");
    verify->add_option("--a", o.a)->required();
    verify->add_option("--b", o.b)->required();
    bind(verify, detail::cmd_verify);
    auto* degen = ws->add_subcommand("degenerate", "The three readings at a = 0");
    degen->add_option("--b", o.b)->required();
    degen->add_option("--form", o.form)->check(CLI::Range(1, 3));
    bind(degen, detail::cmd_degenerate);
    auto* sw = ws->add_subcommand("sweep", "Closed form vs oracle over a range of a");
    sw->add_option("--b", o.b)->required();
    sw->add_option("--a-min", o.a_min)->required();
    sw->add_option("--a-max", o.a_max)->required();
    sw->add_option("--steps", o.steps)->required();
    sw->add_option("--out", o.out_path, "TSV output path (stdout if omitted)");
    bind(sw, detail::cmd_sweep);
    auto* orc = ws->add_subcommand("oracle", "Solve for c by bisection");
    orc->add_option("--a", o.a)->required();
    orc->add_option("--b", o.b)->required();
    bind(orc, detail::cmd_oracle);

    auto* render = app.add_subcommand("render", "Write an SVG figure (1-5)");
    render->add_option("--figure", o.figure)->required()->check(CLI::Range(1, 5));
    render->add_option("--a", o.a)->capture_default_str();
    render->add_option("--b", o.b)->capture_default_str();
    render->add_option("--out", o.out_path, "SVG output path (stdout if omitted)");
    render->add_option("--width", o.width)->capture_default_str();
    render->add_option("--height", o.height)->capture_default_str();
    bind(render, detail::cmd_render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    try {
        return selected ? selected(o, out) : 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace zdgeom::cli
