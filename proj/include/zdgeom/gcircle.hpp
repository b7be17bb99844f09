#pragma once

// Generalized circles: q(x^2+y^2) + 2gx + 2fy + c = 0.
//
// One coefficient quadruple covers proper circles, point circles and lines.
// Radius and center follow the usual formulas evaluated with total division,
// so a line (q == 0) has radius 0 and center (0, 0).

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "zdgeom/zd_scalar.hpp"

namespace zdgeom {

struct Point {
    ZdScalar x;
    ZdScalar y;

    Point() = default;
    Point(ZdScalar x_, ZdScalar y_) : x(std::move(x_)), y(std::move(y_)) {
        ZdScalar::require_same_mode(x, y);
    }

    Mode mode() const noexcept { return x.mode(); }

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

inline ZdScalar squared_distance(const Point& a, const Point& b) {
    return square(a.x - b.x) + square(a.y - b.y);
}

inline ZdScalar distance(const Point& a, const Point& b) { return zd_sqrt(squared_distance(a, b)); }

enum class CurveKind { ProperCircle, PointCircle, Line, EmptyCurve };

enum class TangencyKind { ExternalTangent, InternalTangent, LineTangent, NotTangent };

inline const char* to_string(CurveKind k) noexcept {
    switch (k) {
    case CurveKind::ProperCircle: return "ProperCircle";
    case CurveKind::PointCircle: return "PointCircle";
    case CurveKind::Line: return "Line";
    case CurveKind::EmptyCurve: return "EmptyCurve";
    }
    return "?";
}

inline const char* to_string(TangencyKind k) noexcept {
    switch (k) {
    case TangencyKind::ExternalTangent: return "ExternalTangent";
    case TangencyKind::InternalTangent: return "InternalTangent";
    case TangencyKind::LineTangent: return "LineTangent";
    case TangencyKind::NotTangent: return "NotTangent";
    }
    return "?";
}

/// Relative tolerance for discriminant-vs-zero tests in float mode; the
/// bound is this times max(1, g^2 + f^2). Exact mode compares strictly.
inline constexpr double float_classify_tolerance = 1e-12;

class GCircle {
public:
    GCircle(ZdScalar q, ZdScalar g, ZdScalar f, ZdScalar c)
        : q_(std::move(q)), g_(std::move(g)), f_(std::move(f)), c_(std::move(c)) {
        ZdScalar::require_same_mode(q_, g_);
        ZdScalar::require_same_mode(q_, f_);
        ZdScalar::require_same_mode(q_, c_);
        if (q_.is_zero() && g_.is_zero() && f_.is_zero() && c_.is_zero())
            throw error(errc::invalid_argument, "all four coefficients are zero");
    }

    static GCircle exact(std::int64_t q, std::int64_t g, std::int64_t f, std::int64_t c) {
        return GCircle(ZdScalar::exact(q), ZdScalar::exact(g), ZdScalar::exact(f), ZdScalar::exact(c));
    }

    static GCircle floating(double q, double g, double f, double c) {
        return GCircle(ZdScalar::floating(q), ZdScalar::floating(g), ZdScalar::floating(f),
                       ZdScalar::floating(c));
    }

    /// "q,g,f,c" where each entry is a decimal or p/q rational.
    static GCircle parse(std::string_view text, Mode mode) {
        std::vector<ZdScalar> parts;
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            parts.push_back(parse_scalar(text.substr(start, comma - start), mode));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        if (parts.size() != 4)
            throw error(errc::parse_error, "expected four coefficients q,g,f,c");
        return GCircle(parts[0], parts[1], parts[2], parts[3]);
    }

    const ZdScalar& q() const noexcept { return q_; }
    const ZdScalar& g() const noexcept { return g_; }
    const ZdScalar& f() const noexcept { return f_; }
    const ZdScalar& c() const noexcept { return c_; }

    Mode mode() const noexcept { return q_.mode(); }

    /// g^2 + f^2 - qc; the squared radius times q^2.
    ZdScalar discriminant() const { return square(g_) + square(f_) - q_ * c_; }

    GCircle to_float() const { return GCircle(q_.to_float(), g_.to_float(), f_.to_float(), c_.to_float()); }

    std::string to_string() const {
        return "(" + q_.to_string() + ", " + g_.to_string() + ", " + f_.to_string() + ", " + c_.to_string() + ")";
    }

    /// Coefficient-wise equality; proportional quadruples are distinct values.
    friend bool operator==(const GCircle& a, const GCircle& b) {
        return a.q_ == b.q_ && a.g_ == b.g_ && a.f_ == b.f_ && a.c_ == b.c_;
    }

    friend std::ostream& operator<<(std::ostream& os, const GCircle& k) { return os << k.to_string(); }

private:
    ZdScalar q_, g_, f_, c_;
};

inline CurveKind classify(const GCircle& k) {
    if (k.q().is_zero())
        return (k.g().is_zero() && k.f().is_zero()) ? CurveKind::EmptyCurve : CurveKind::Line;
    const ZdScalar disc = k.discriminant();
    int s = disc.sign();
    if (k.mode() == Mode::Float) {
        const double bound = float_classify_tolerance * std::max(1.0, (square(k.g()) + square(k.f())).to_double());
        if (std::abs(disc.to_double()) <= bound)
            s = 0;
    }
    if (s > 0)
        return CurveKind::ProperCircle;
    return s == 0 ? CurveKind::PointCircle : CurveKind::EmptyCurve;
}

inline void require_nonempty(const GCircle& k, CurveKind kind) {
    if (kind == CurveKind::EmptyCurve)
        throw error(errc::empty_curve, "curve " + k.to_string() + " has no real points");
}

/// sqrt((g^2+f^2-qc)/q^2) with total division; lines give exactly 0.
inline ZdScalar radius(const GCircle& k) {
    const CurveKind kind = classify(k);
    require_nonempty(k, kind);
    if (kind == CurveKind::PointCircle)
        return k.q().zero(); // float discriminant may sit just below zero
    return zd_sqrt(zd_div(k.discriminant(), square(k.q())));
}

/// (-g/q, -f/q) with total division; the center of a line is the origin.
inline Point center(const GCircle& k) {
    require_nonempty(k, classify(k));
    return {zd_div(-k.g(), k.q()), zd_div(-k.f(), k.q())};
}

inline ZdScalar eval_at(const GCircle& k, const Point& p) {
    return k.q() * (square(p.x) + square(p.y)) + 2 * k.g() * p.x + 2 * k.f() * p.y + k.c();
}

inline GCircle scale(const GCircle& k, const ZdScalar& lambda) {
    if (lambda.is_zero())
        throw error(errc::invalid_argument, "scale factor must be nonzero");
    return GCircle(lambda * k.q(), lambda * k.g(), lambda * k.f(), lambda * k.c());
}

/// True when both quadruples describe the same zero set, i.e. they are
/// proportional. Cheap cross-multiplication, no division.
inline bool same_curve(const GCircle& a, const GCircle& b) {
    const std::array<const ZdScalar*, 4> x{&a.q(), &a.g(), &a.f(), &a.c()};
    const std::array<const ZdScalar*, 4> y{&b.q(), &b.g(), &b.f(), &b.c()};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (*x[i] * *y[j] != *x[j] * *y[i])
                return false;
    return true;
}

namespace detail {

// Perpendicular distance from p to the line 2gx + 2fy + c = 0.
inline ZdScalar line_distance(const GCircle& line, const Point& p) {
    const ZdScalar num = abs(2 * line.g() * p.x + 2 * line.f() * p.y + line.c());
    return num / (2 * zd_sqrt(square(line.g()) + square(line.f())));
}

inline TangencyKind tangency_impl(const GCircle& c1, const GCircle& c2, const ZdScalar& tol) {
    const CurveKind k1 = classify(c1), k2 = classify(c2);
    require_nonempty(c1, k1);
    require_nonempty(c2, k2);
    const auto within = [&](const ZdScalar& v) { return abs(v) <= tol; };

    if (k1 == CurveKind::Line && k2 == CurveKind::Line)
        return TangencyKind::NotTangent;
    if (k1 == CurveKind::Line || k2 == CurveKind::Line) {
        const GCircle& line = k1 == CurveKind::Line ? c1 : c2;
        const GCircle& circle = k1 == CurveKind::Line ? c2 : c1;
        return within(line_distance(line, center(circle)) - radius(circle)) ? TangencyKind::LineTangent
                                                                            : TangencyKind::NotTangent;
    }
    const ZdScalar r1 = radius(c1), r2 = radius(c2);
    const ZdScalar d = distance(center(c1), center(c2));
    if (within(d - (r1 + r2)))
        return TangencyKind::ExternalTangent;
    if (r1 != r2 && within(d - abs(r1 - r2)))
        return TangencyKind::InternalTangent;
    return TangencyKind::NotTangent;
}

} // namespace detail

/// Tangency relation between two non-empty generalized circles. Point
/// circles take part with radius 0, so a point is tangent to a curve when
/// it lies on it within `tol`. Exact inputs are compared exactly when every
/// distance stays in a single quadratic field, otherwise in float.
inline TangencyKind tangency(const GCircle& c1, const GCircle& c2, double tol) {
    if (!(tol >= 0.0) || !std::isfinite(tol))
        throw error(errc::invalid_argument, "tolerance must be a finite nonnegative number");
    if (c1.mode() != c2.mode())
        throw error(errc::mode_mismatch, "tangency of curves in different modes");
    if (c1.mode() == Mode::Exact) {
        try {
            return detail::tangency_impl(c1, c2, ZdScalar::from_double(tol, Mode::Exact));
        } catch (const error& e) {
            if (e.code() != errc::irrational)
                throw;
        }
        return detail::tangency_impl(c1.to_float(), c2.to_float(), ZdScalar::floating(tol));
    }
    return detail::tangency_impl(c1, c2, ZdScalar::floating(tol));
}

} // namespace zdgeom
