#pragma once

// Three-circle tangency configuration between two parallel lines.
//
// Frame: origin at the contact point of beta with the line s (y = 0), so
// beta has center (0, b) and the second tangent t is y = 2b. alpha (radius a)
// touches s and beta externally; gamma (radius c) touches t, alpha and beta
// externally. The radii satisfy c = b^2 / (4a).
//
// At a = 0 the circle equations are evaluated term by term with total
// division. The three algebraic arrangements of each equation (FormIndex)
// then denote different curves, paired by index:
//   Form1: alpha = origin (point),  gamma = line s
//   Form2: alpha = gamma = y-axis
//   Form3: alpha = line t,          gamma = point (0, 2b)

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zdgeom/gcircle.hpp"

namespace zdgeom {

enum class FormIndex { Form1 = 1, Form2 = 2, Form3 = 3 };

inline FormIndex form_from_int(int k) {
    if (k < 1 || k > 3)
        throw error(errc::invalid_argument, "form index must be 1, 2 or 3");
    return static_cast<FormIndex>(k);
}

struct WasanConfiguration {
    ZdScalar a, b, c;
    GCircle alpha, beta, gamma;
    GCircle s, t;

    Mode mode() const noexcept { return b.mode(); }
};

/// Signed residuals (achieved distance - required distance) of the five
/// tangencies, in length units.
struct TangencyReport {
    ZdScalar alpha_s, alpha_beta, gamma_t, gamma_beta, gamma_alpha;
    ZdScalar max_abs;
    double tolerance = 0.0;

    bool passed() const { return max_abs.to_double() <= tolerance; }

    std::vector<std::pair<std::string, ZdScalar>> named() const {
        return {{"alpha_s", alpha_s},
                {"alpha_beta", alpha_beta},
                {"gamma_t", gamma_t},
                {"gamma_beta", gamma_beta},
                {"gamma_alpha", gamma_alpha}};
    }
};

namespace detail {

inline void require_radii(const ZdScalar& a, const ZdScalar& b, bool a_positive) {
    ZdScalar::require_same_mode(a, b);
    if (b.sign() <= 0)
        throw error(errc::invalid_argument, "b must be positive, got " + b.to_string());
    if (a.sign() < 0 || (a_positive && a.is_zero()))
        throw error(errc::invalid_argument,
                    std::string("a must be ") + (a_positive ? "positive" : "nonnegative") + ", got " + a.to_string());
}

} // namespace detail

/// c = b^2 / (4a) with total division, so a = 0 gives c = 0.
inline ZdScalar gamma_radius(const ZdScalar& a, const ZdScalar& b) {
    detail::require_radii(a, b, false);
    return zd_div(square(b), 4 * a);
}

/// The strictly geometric configuration (a > 0). Exact inputs stay exact:
/// sqrt(ab) and sqrt(bc) always lie in the same quadratic field Q(sqrt(ab)).
inline WasanConfiguration build_configuration(const ZdScalar& a, const ZdScalar& b) {
    detail::require_radii(a, b, true);
    const ZdScalar one = a.lift(1), zero = a.zero();
    const ZdScalar c = gamma_radius(a, b);
    const ZdScalar sqrt_ab = zd_sqrt(a * b);
    const ZdScalar sqrt_bc = zd_sqrt(b * c);
    const ZdScalar gamma_y = 2 * b - c; // gamma's center height

    return WasanConfiguration{
        a,
        b,
        c,
        GCircle(one, -2 * sqrt_ab, -a, 4 * a * b),
        GCircle(one, zero, -b, zero),
        GCircle(one, -2 * sqrt_bc, -gamma_y, square(gamma_y) + 4 * b * c - square(c)),
        GCircle(zero, zero, one, zero),
        GCircle(zero, zero, one, -4 * b),
    };
}

namespace detail {

inline TangencyReport residuals(const WasanConfiguration& cfg, double tol) {
    const Point ca = center(cfg.alpha), cb = center(cfg.beta), cg = center(cfg.gamma);
    TangencyReport r{
        line_distance(cfg.s, ca) - cfg.a,
        distance(ca, cb) - (cfg.a + cfg.b),
        line_distance(cfg.t, cg) - cfg.c,
        distance(cg, cb) - (cfg.b + cfg.c),
        distance(cg, ca) - (cfg.a + cfg.c),
        cfg.a.zero(),
        tol,
    };
    for (const auto& [name, v] : r.named())
        r.max_abs = std::max(r.max_abs, abs(v));
    return r;
}

inline WasanConfiguration to_float(const WasanConfiguration& cfg) {
    return {cfg.a.to_float(),     cfg.b.to_float(),    cfg.c.to_float(),
            cfg.alpha.to_float(), cfg.beta.to_float(), cfg.gamma.to_float(),
            cfg.s.to_float(),     cfg.t.to_float()};
}

} // namespace detail

/// Residuals of the five tangencies; all zero when the configuration is
/// consistent. Exact configurations are checked exactly.
inline TangencyReport verify_configuration(const WasanConfiguration& cfg, double tol) {
    if (cfg.a.sign() <= 0)
        throw error(errc::invalid_argument, "verification needs a > 0");
    if (cfg.mode() == Mode::Exact) {
        try {
            return detail::residuals(cfg, tol);
        } catch (const error& e) {
            if (e.code() != errc::irrational)
                throw;
        }
        return detail::residuals(detail::to_float(cfg), tol);
    }
    return detail::residuals(cfg, tol);
}

/// alpha's equation in the k-th arrangement, each written coefficient
/// evaluated with total division:
///   Form1: (x - 2sqrt(ab))^2 + (y - a)^2 - a^2 = 0
///   Form2: Form1 / sqrt(a)
///   Form3: Form1 / a
inline GCircle alpha_form(FormIndex k, const ZdScalar& a, const ZdScalar& b) {
    detail::require_radii(a, b, false);
    const ZdScalar one = a.lift(1);
    switch (k) {
    case FormIndex::Form1:
        return GCircle(one, -2 * zd_sqrt(a * b), -a, 4 * a * b);
    case FormIndex::Form2: {
        const ZdScalar ra = zd_sqrt(a);
        return GCircle(zd_div(one, ra), -2 * zd_sqrt(b), -ra, 4 * b * ra);
    }
    case FormIndex::Form3:
        return GCircle(zd_div(one, a), -2 * zd_sqrt(zd_div(b, a)), -one, 4 * b);
    }
    throw error(errc::invalid_argument, "unknown form");
}

/// gamma's equation after substituting c = b^2/(4a), in the k-th arrangement:
///   Form1: a(x^2 + (y-2b)^2) - 2bx sqrt(ab) + b^2 y / 2 = 0
///   Form2: sqrt(a)(x^2 + (y-2b)^2) - 2bx sqrt(b) + b^2 y / (2 sqrt(a)) = 0
///   Form3: x^2 + (y-2b)^2 - 2bx sqrt(b/a) + b^2 y / (2a) = 0
inline GCircle gamma_form(FormIndex k, const ZdScalar& a, const ZdScalar& b) {
    detail::require_radii(a, b, false);
    const ZdScalar one = a.lift(1);
    const ZdScalar bb = square(b);
    switch (k) {
    case FormIndex::Form1:
        return GCircle(a, -b * zd_sqrt(a * b), -(2 * a * b - bb / 4), 4 * a * bb);
    case FormIndex::Form2: {
        const ZdScalar ra = zd_sqrt(a);
        return GCircle(ra, -b * zd_sqrt(b), -2 * b * ra + zd_div(bb, 4 * ra), 4 * bb * ra);
    }
    case FormIndex::Form3:
        return GCircle(one, -b * zd_sqrt(zd_div(b, a)), -(2 * b - zd_div(bb, 4 * a)), 4 * bb);
    }
    throw error(errc::invalid_argument, "unknown form");
}

struct DegenerateCase {
    FormIndex form;
    int figure; // 3, 4 or 5
    GCircle alpha;
    GCircle gamma;
    std::string label;
};

/// The three readings of the configuration at a = 0, ordered by figure.
inline std::vector<DegenerateCase> degenerate_cases(const ZdScalar& b) {
    const ZdScalar a = b.zero();
    detail::require_radii(a, b, false);
    auto make = [&](FormIndex k, int figure, std::string label) {
        return DegenerateCase{k, figure, alpha_form(k, a, b), gamma_form(k, a, b), std::move(label)};
    };
    std::vector<DegenerateCase> out;
    out.push_back(make(FormIndex::Form3, 3, "alpha is the line t, gamma is the point (0,2b)"));
    out.push_back(make(FormIndex::Form1, 4, "alpha is the origin, gamma is the line s"));
    out.push_back(make(FormIndex::Form2, 5, "alpha and gamma both coincide with the y-axis"));
    return out;
}

// --- root-finding oracle -------------------------------------------------

struct OracleResult {
    ZdScalar root;       // float mode
    int iterations = 0;  // bisection steps
    int doublings = 0;   // bracket expansions
};

namespace detail {

// dist(alpha center, gamma center) - (a + c), where gamma already touches t
// and beta through its center parameterization (2 sqrt(bc), 2b - c).
inline WideFloat gamma_alpha_residual(const WideFloat& a, const WideFloat& b, const WideFloat& c) {
    const WideFloat dx = 2 * bmp::sqrt(a * b) - 2 * bmp::sqrt(b * c);
    const WideFloat dy = a - (2 * b - c);
    return bmp::sqrt(dx * dx + dy * dy) - (a + c);
}

} // namespace detail

/// Solves for gamma's radius by bisection on the gamma-alpha tangency
/// residual, independently of the closed form. Runs in 50-digit binary
/// floating point so the residual's cancellation near the root does not
/// limit accuracy; the result is returned in float mode.
inline OracleResult oracle_solve_c(const ZdScalar& a_in, const ZdScalar& b_in, double tol) {
    if (!(tol >= 0.0))
        throw error(errc::invalid_argument, "tolerance must be nonnegative");
    const double ad = a_in.to_double(), bd = b_in.to_double();
    if (!(ad > 0.0) || !(bd > 0.0))
        throw error(errc::invalid_argument, "oracle needs a > 0 and b > 0");
    const WideFloat a = a_in.to_wide(), b = b_in.to_wide();
    const auto residual = [&](const WideFloat& c) { return detail::gamma_alpha_residual(a, b, c); };

    OracleResult out;
    WideFloat lo = WideFloat(1e-12) * b;
    WideFloat hi = WideFloat(1e6) * b * std::max(WideFloat(1), WideFloat(1 / a));
    const WideFloat r_lo = residual(lo);
    if (r_lo == 0) {
        out.root = ZdScalar::floating(lo.convert_to<double>());
        return out;
    }
    if (r_lo < 0)
        throw error(errc::no_bracket, "residual already negative at the lower bracket");
    while (residual(hi) > 0) {
        if (out.doublings == 200)
            throw error(errc::no_bracket, "no sign change after 200 doublings");
        hi *= 2;
        ++out.doublings;
    }
    const WideFloat wtol(tol);
    while (true) {
        const WideFloat mid = (lo + hi) / 2;
        if (hi - lo <= wtol * std::max(WideFloat(1), mid) || mid == lo || mid == hi)
            break;
        (residual(mid) > 0 ? lo : hi) = mid;
        ++out.iterations;
    }
    out.root = ZdScalar::floating(((lo + hi) / 2).convert_to<double>());
    return out;
}

struct SweepRow {
    double a = 0.0;
    double c_closed = 0.0;
    double c_oracle = 0.0;
    double max_residual = 0.0;
};

/// One row per a: closed-form c, oracle c and the worst tangency residual,
/// all evaluated in float mode. Rows keep the input order.
inline std::vector<SweepRow> sweep(const ZdScalar& b, std::span<const double> a_values) {
    const ZdScalar bf = b.to_float();
    std::vector<SweepRow> rows;
    rows.reserve(a_values.size());
    for (const double a : a_values) {
        const ZdScalar af = ZdScalar::floating(a);
        const WasanConfiguration cfg = build_configuration(af, bf);
        rows.push_back({a, cfg.c.to_double(), oracle_solve_c(af, bf, 1e-12).root.to_double(),
                        verify_configuration(cfg, 0.0).max_abs.to_double()});
    }
    return rows;
}

} // namespace zdgeom
