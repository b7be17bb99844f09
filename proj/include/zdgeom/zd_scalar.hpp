#pragma once

// Real scalars with total division: x / 0 == 0 for every x.
//
// A ZdScalar lives in one of two modes:
//   Exact - an element of a real quadratic field Q(sqrt(m)), stored as
//           rational + coeff * sqrt(m) with arbitrary-precision rationals.
//           Pure rationals are the common case (coeff == 0).
//   Float - a finite IEEE-754 double.
// Binary operations never mix modes; callers convert explicitly.

#include <array>
#include <cctype>
#include <charconv>
#include <compare>
#include <concepts>
#include <cstdint>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <variant>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "zdgeom/error.hpp"

namespace zdgeom {

namespace bmp = boost::multiprecision;

using BigInt = bmp::cpp_int;
using Rational = bmp::cpp_rational;
using WideFloat = bmp::cpp_bin_float_50;

enum class Mode { Exact, Float };

inline const char* to_string(Mode m) noexcept { return m == Mode::Exact ? "exact" : "float"; }

namespace detail {

inline bool perfect_square(const BigInt& n, BigInt& root) {
    if (n < 0)
        return false;
    BigInt rem;
    root = bmp::sqrt(n, rem);
    return rem == 0;
}

inline int sign_of(const Rational& r) { return r.sign(); }

// Small primes used to pull square factors out of a radicand. Radicands are
// not required to be square-free; compatibility between two radicands is
// decided by a perfect-square test on their product.
inline constexpr std::array<unsigned, 25> small_primes{2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                       29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                       67, 71, 73, 79, 83, 89, 97};

} // namespace detail

/// Exact element of Q(sqrt(m)): rational + coeff * sqrt(radicand).
///
/// Invariant: coeff == 0 iff radicand == 1; otherwise radicand > 1 and is
/// not a perfect square. Values over different radicands combine when the
/// product of the radicands is a perfect square (sqrt(8) and sqrt(2)), and
/// signal errc::irrational otherwise.
class QuadSurd {
public:
    QuadSurd() = default;
    QuadSurd(Rational r) : rational_(std::move(r)) {} // NOLINT: implicit by design of the numeric tower

    /// Exact square root of a nonnegative rational.
    static QuadSurd sqrt_of(const Rational& x) {
        if (x < 0)
            throw error(errc::negative_operand, "square root of negative value");
        if (x == 0)
            return {};
        const BigInt num = bmp::numerator(x);
        const BigInt den = bmp::denominator(x);
        BigInt rn, rd;
        if (detail::perfect_square(num, rn) && detail::perfect_square(den, rd))
            return QuadSurd(Rational(rn) / rd);
        // sqrt(p/q) = sqrt(p*q) / q
        return surd(Rational(1) / den, num * den);
    }

    const Rational& rational_part() const noexcept { return rational_; }
    const Rational& surd_coeff() const noexcept { return coeff_; }
    const BigInt& radicand() const noexcept { return radicand_; }

    bool is_rational() const noexcept { return coeff_ == 0; }
    bool is_zero() const noexcept { return coeff_ == 0 && rational_ == 0; }

    int sign() const {
        const int s0 = detail::sign_of(rational_);
        const int s1 = detail::sign_of(coeff_);
        if (s1 == 0 || s0 == s1)
            return s0 == 0 ? s1 : s0;
        if (s0 == 0)
            return s1;
        // Opposite signs: compare r^2 against c^2 * m (never equal, m non-square).
        return rational_ * rational_ > coeff_ * coeff_ * radicand_ ? s0 : s1;
    }

    QuadSurd operator-() const { return QuadSurd(-rational_, -coeff_, radicand_); }

    friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
        if (y.is_rational())
            return QuadSurd(x.rational_ + y.rational_, x.coeff_, x.radicand_);
        if (x.is_rational())
            return QuadSurd(x.rational_ + y.rational_, y.coeff_, y.radicand_);
        const auto yc = y.coeff_over(x.radicand_);
        if (!yc)
            throw error(errc::irrational, "sum of incompatible square roots");
        return normalized(x.rational_ + y.rational_, x.coeff_ + *yc, x.radicand_);
    }

    friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

    friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
        if (y.is_rational())
            return normalized(x.rational_ * y.rational_, x.coeff_ * y.rational_, x.radicand_);
        if (x.is_rational())
            return normalized(x.rational_ * y.rational_, x.rational_ * y.coeff_, y.radicand_);
        if (const auto yc = y.coeff_over(x.radicand_)) {
            const Rational m(x.radicand_);
            return normalized(x.rational_ * y.rational_ + x.coeff_ * *yc * m,
                              x.rational_ * *yc + x.coeff_ * y.rational_, x.radicand_);
        }
        if (x.rational_ == 0 && y.rational_ == 0)
            return surd(x.coeff_ * y.coeff_, x.radicand_ * y.radicand_);
        throw error(errc::irrational, "product of incompatible square roots");
    }

    /// Multiplicative inverse; requires a nonzero value.
    QuadSurd inverse() const {
        if (is_zero())
            throw error(errc::invalid_argument, "inverse of zero");
        if (is_rational())
            return QuadSurd(Rational(1) / rational_);
        const Rational norm = rational_ * rational_ - coeff_ * coeff_ * radicand_;
        return QuadSurd(rational_ / norm, -coeff_ / norm, radicand_);
    }

    /// Exact three-way comparison, valid across incompatible radicands.
    friend int compare(const QuadSurd& x, const QuadSurd& y) {
        if (x.is_rational() || y.is_rational() || y.coeff_over(x.radicand_))
            return (x - y).sign();
        // x - y = A + B*sqrt(m) - C*sqrt(n) with 1, sqrt(m), sqrt(n) independent.
        const QuadSurd lhs(x.rational_ - y.rational_, x.coeff_, x.radicand_);
        const int sl = lhs.sign();
        const int sr = y.coeff_.sign(); // sign of C*sqrt(n)
        if (sl >= 0 && sr < 0)
            return 1;
        if (sl <= 0 && sr > 0)
            return -1;
        const QuadSurd lhs_sq = lhs * lhs;
        const Rational rhs_sq = y.coeff_ * y.coeff_ * y.radicand_;
        const int d = (lhs_sq - QuadSurd(rhs_sq)).sign();
        return sl > 0 ? d : -d;
    }

    friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
        if (x.radicand_ == y.radicand_)
            return x.rational_ == y.rational_ && x.coeff_ == y.coeff_;
        return compare(x, y) == 0;
    }

    template <class Real = WideFloat>
    Real approx() const {
        Real v = Real(rational_);
        if (!is_rational())
            v += Real(coeff_) * bmp::sqrt(Real(radicand_));
        return v;
    }

    std::string to_string() const {
        if (is_rational())
            return rational_str(rational_);
        std::string root = "sqrt(" + radicand_.str() + ")";
        auto scaled = [&](const Rational& c) {
            if (c == 1)
                return root;
            return rational_str(c) + "*" + root;
        };
        if (rational_ == 0)
            return coeff_ == -1 ? "-" + root : scaled(coeff_);
        const std::string tail = coeff_ < 0 ? " - " + scaled(-coeff_) : " + " + scaled(coeff_);
        return rational_str(rational_) + tail;
    }

private:
    QuadSurd(Rational r, Rational c, BigInt m)
        : rational_(std::move(r)), coeff_(std::move(c)), radicand_(std::move(m)) {
        if (coeff_ == 0)
            radicand_ = 1;
    }

    static std::string rational_str(const Rational& r) {
        if (bmp::denominator(r) == 1)
            return bmp::numerator(r).str();
        return bmp::numerator(r).str() + "/" + bmp::denominator(r).str();
    }

    static QuadSurd normalized(Rational r, Rational c, BigInt m) {
        return QuadSurd(std::move(r), std::move(c), std::move(m));
    }

    // coeff * sqrt(m) for an arbitrary positive integer m.
    static QuadSurd surd(Rational coeff, BigInt m) {
        if (coeff == 0 || m == 0)
            return {};
        BigInt root;
        if (detail::perfect_square(m, root))
            return QuadSurd(coeff * root);
        for (unsigned p : detail::small_primes) {
            const BigInt sq = BigInt(p) * p;
            while (m % sq == 0) {
                m /= sq;
                coeff *= p;
            }
        }
        if (detail::perfect_square(m, root))
            return QuadSurd(coeff * root);
        return QuadSurd(Rational(0), std::move(coeff), std::move(m));
    }

    // This value's surd coefficient re-expressed over sqrt(m), if compatible.
    std::optional<Rational> coeff_over(const BigInt& m) const {
        if (radicand_ == m)
            return coeff_;
        BigInt root;
        if (!detail::perfect_square(radicand_ * m, root))
            return std::nullopt;
        // sqrt(n) = sqrt(n*m) / m * sqrt(m)
        return coeff_ * Rational(root) / Rational(m);
    }

    Rational rational_{0};
    Rational coeff_{0};
    BigInt radicand_{1};
};

/// Real scalar with total division. Immutable value type.
class ZdScalar {
public:
    ZdScalar() = default;

    static ZdScalar exact(QuadSurd v) { return ZdScalar(std::move(v)); }
    static ZdScalar exact(const Rational& r) { return ZdScalar(QuadSurd(r)); }
    static ZdScalar exact(std::int64_t num, std::int64_t den = 1) {
        if (den == 0)
            return ZdScalar();
        return exact(Rational(num) / den);
    }

    static ZdScalar floating(double v) {
        if (!std::isfinite(v))
            throw error(errc::non_finite, "float-mode scalars must be finite");
        return ZdScalar(v == 0.0 ? 0.0 : v); // drops the sign of -0.0
    }

    static ZdScalar integer(std::int64_t n, Mode m) {
        return m == Mode::Exact ? exact(n) : floating(static_cast<double>(n));
    }

    /// The binary value of `v`, exactly, in the requested mode.
    static ZdScalar from_double(double v, Mode m) {
        if (m == Mode::Float)
            return floating(v);
        if (!std::isfinite(v))
            throw error(errc::non_finite, "cannot represent non-finite value exactly");
        return exact(Rational(v));
    }

    Mode mode() const noexcept { return std::holds_alternative<double>(v_) ? Mode::Float : Mode::Exact; }
    bool is_exact() const noexcept { return mode() == Mode::Exact; }

    /// Exact payload, or nullptr in float mode.
    const QuadSurd* exact_value() const noexcept { return std::get_if<QuadSurd>(&v_); }

    /// The value as a rational, if it is an exact rational.
    std::optional<Rational> rational() const {
        if (const auto* q = exact_value(); q && q->is_rational())
            return q->rational_part();
        return std::nullopt;
    }

    bool is_zero() const {
        if (const auto* q = exact_value())
            return q->is_zero();
        return std::get<double>(v_) == 0.0;
    }

    int sign() const {
        if (const auto* q = exact_value())
            return q->sign();
        const double d = std::get<double>(v_);
        return (d > 0) - (d < 0);
    }

    double to_double() const {
        if (const auto* q = exact_value())
            return q->approx().convert_to<double>();
        return std::get<double>(v_);
    }

    WideFloat to_wide() const {
        if (const auto* q = exact_value())
            return q->approx();
        return WideFloat(std::get<double>(v_));
    }

    ZdScalar to_float() const { return floating(to_double()); }

    /// Same numeric mode as this value.
    ZdScalar lift(std::int64_t n) const { return integer(n, mode()); }
    ZdScalar zero() const { return lift(0); }

    /// Fraction / surd text in exact mode, shortest round-trip decimal in float mode.
    std::string to_string() const {
        if (const auto* q = exact_value())
            return q->to_string();
        std::array<char, 64> buf{};
        auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::get<double>(v_));
        return std::string(buf.data(), end);
    }

    std::string to_decimal(int digits = 17) const {
        std::ostringstream os;
        os << std::setprecision(digits);
        if (const auto* q = exact_value())
            os << q->approx();
        else
            os << std::get<double>(v_);
        return os.str();
    }

    ZdScalar operator-() const {
        if (const auto* q = exact_value())
            return ZdScalar(-*q);
        return floating(-std::get<double>(v_));
    }

    friend ZdScalar operator+(const ZdScalar& x, const ZdScalar& y) {
        return binary(x, y, [](const QuadSurd& a, const QuadSurd& b) { return a + b; },
                      [](double a, double b) { return a + b; });
    }
    friend ZdScalar operator-(const ZdScalar& x, const ZdScalar& y) {
        return binary(x, y, [](const QuadSurd& a, const QuadSurd& b) { return a - b; },
                      [](double a, double b) { return a - b; });
    }
    friend ZdScalar operator*(const ZdScalar& x, const ZdScalar& y) {
        return binary(x, y, [](const QuadSurd& a, const QuadSurd& b) { return a * b; },
                      [](double a, double b) { return a * b; });
    }
    /// Total division, same as zd_div.
    friend ZdScalar operator/(const ZdScalar& x, const ZdScalar& y) {
        require_same_mode(x, y);
        if (y.is_zero())
            return x.zero();
        return binary(x, y, [](const QuadSurd& a, const QuadSurd& b) { return a * b.inverse(); },
                      [](double a, double b) { return a / b; });
    }

    template <std::integral I>
    friend ZdScalar operator*(I n, const ZdScalar& x) { return x.lift(n) * x; }
    template <std::integral I>
    friend ZdScalar operator*(const ZdScalar& x, I n) { return x * x.lift(n); }
    template <std::integral I>
    friend ZdScalar operator+(const ZdScalar& x, I n) { return x + x.lift(n); }
    template <std::integral I>
    friend ZdScalar operator-(const ZdScalar& x, I n) { return x - x.lift(n); }
    template <std::integral I>
    friend ZdScalar operator-(I n, const ZdScalar& x) { return x.lift(n) - x; }
    template <std::integral I>
    friend ZdScalar operator/(const ZdScalar& x, I n) { return x / x.lift(n); }

    friend bool operator==(const ZdScalar& x, const ZdScalar& y) {
        require_same_mode(x, y);
        if (const auto* q = x.exact_value())
            return *q == *y.exact_value();
        return std::get<double>(x.v_) == std::get<double>(y.v_);
    }

    friend std::strong_ordering operator<=>(const ZdScalar& x, const ZdScalar& y) {
        require_same_mode(x, y);
        int c = 0;
        if (const auto* q = x.exact_value()) {
            c = compare(*q, *y.exact_value());
        } else {
            const double a = std::get<double>(x.v_), b = std::get<double>(y.v_);
            c = (a > b) - (a < b);
        }
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const ZdScalar& x) { return os << x.to_string(); }

    static void require_same_mode(const ZdScalar& x, const ZdScalar& y) {
        if (x.mode() != y.mode())
            throw error(errc::mode_mismatch, std::string("cannot combine ") + zdgeom::to_string(x.mode()) +
                                                 " and " + zdgeom::to_string(y.mode()) + " scalars");
    }

private:
    explicit ZdScalar(QuadSurd v) : v_(std::move(v)) {}
    explicit ZdScalar(double v) : v_(v) {}

    template <class ExactOp, class FloatOp>
    static ZdScalar binary(const ZdScalar& x, const ZdScalar& y, ExactOp exact_op, FloatOp float_op) {
        require_same_mode(x, y);
        if (const auto* q = x.exact_value())
            return ZdScalar(exact_op(*q, *y.exact_value()));
        return floating(float_op(std::get<double>(x.v_), std::get<double>(y.v_)));
    }

    std::variant<QuadSurd, double> v_{QuadSurd{}};
};

/// n / d with d == 0 giving 0 in the operands' mode.
inline ZdScalar zd_div(const ZdScalar& n, const ZdScalar& d) { return n / d; }

/// Square root. Exact mode stays exact for rational operands (the result may
/// be a quadratic surd); the root of a surd signals errc::irrational.
inline ZdScalar zd_sqrt(const ZdScalar& x) {
    if (x.sign() < 0)
        throw error(errc::negative_operand, "square root of " + x.to_string());
    if (const auto r = x.rational())
        return ZdScalar::exact(QuadSurd::sqrt_of(*r));
    if (x.is_exact())
        throw error(errc::irrational, "square root of non-rational " + x.to_string());
    return ZdScalar::floating(std::sqrt(x.to_double()));
}

inline ZdScalar abs(const ZdScalar& x) { return x.sign() < 0 ? -x : x; }

inline ZdScalar square(const ZdScalar& x) { return x * x; }

// --- angles -------------------------------------------------------------

/// Angle given as (multiple * pi + residual) radians. Poles of tan are
/// recognised from `multiple` alone, never from a float comparison.
struct PiAngle {
    Rational multiple{0};
    double residual = 0.0;
};

namespace detail {

inline Rational floor_rational(const Rational& r) {
    const BigInt& n = bmp::numerator(r);
    const BigInt& d = bmp::denominator(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n)
        --q;
    return Rational(q);
}

inline Rational parse_decimal(std::string_view s) {
    const std::string text(s);
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-'))
        neg = s[i++] == '-';
    BigInt mantissa = 0;
    long long exponent = 0;
    bool digits = false;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i, digits = true)
        mantissa = mantissa * 10 + (s[i] - '0');
    if (i < s.size() && s[i] == '.') {
        for (++i; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i, digits = true) {
            mantissa = mantissa * 10 + (s[i] - '0');
            --exponent;
        }
    }
    if (!digits)
        throw error(errc::parse_error, "not a number: '" + text + "'");
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        long long e = 0;
        const char* first = s.data() + i + 1;
        if (first < s.data() + s.size() && *first == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), e);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw error(errc::parse_error, "bad exponent in '" + text + "'");
        exponent += e;
        i = s.size();
    }
    if (i != s.size())
        throw error(errc::parse_error, "trailing characters in '" + text + "'");
    if (exponent > 4000 || exponent < -4000)
        throw error(errc::parse_error, "exponent out of range in '" + text + "'");
    Rational value(mantissa);
    const BigInt scale = bmp::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0)
        value /= scale;
    else
        value *= scale;
    return neg ? -value : value;
}

} // namespace detail

/// Parses "p/q" or a decimal such as "-1.25e-3". A zero denominator yields 0.
inline ZdScalar parse_scalar(std::string_view text, Mode mode) {
    const auto slash = text.find('/');
    const Rational num = detail::parse_decimal(text.substr(0, slash));
    Rational den(1);
    if (slash != std::string_view::npos)
        den = detail::parse_decimal(text.substr(slash + 1));
    const ZdScalar n = ZdScalar::exact(num), d = ZdScalar::exact(den);
    const ZdScalar q = zd_div(n, d);
    if (mode == Mode::Exact)
        return q;
    return ZdScalar::floating(q.rational()->convert_to<double>());
}

/// Parses "pi", "-pi", "1/2pi", "3pi", "pi/2", "-3/2*pi".
inline PiAngle parse_pi_angle(std::string_view text) {
    std::string s(text);
    if (const auto pos = s.find("pi"); pos != std::string::npos) {
        std::string before = s.substr(0, pos);
        std::string after = s.substr(pos + 2);
        if (!before.empty() && before.back() == '*')
            before.pop_back();
        if (before.empty() || before == "+")
            before = "1";
        else if (before == "-")
            before = "-1";
        Rational m = detail::parse_decimal(before.substr(0, before.find('/')));
        if (const auto sl = before.find('/'); sl != std::string::npos) {
            const Rational d = detail::parse_decimal(before.substr(sl + 1));
            m = d == 0 ? Rational(0) : m / d;
        }
        if (!after.empty()) {
            if (after.front() != '/')
                throw error(errc::parse_error, "expected '<p>/<q>pi', got '" + s + "'");
            const Rational d = detail::parse_decimal(after.substr(1));
            m = d == 0 ? Rational(0) : m / d;
        }
        return PiAngle{m, 0.0};
    }
    throw error(errc::parse_error, "angle must be a rational multiple of pi, got '" + s + "'");
}

/// tan(theta) = zd_div(sin theta, cos theta).
///
/// When `theta.residual == 0` and the reduced multiple of pi has denominator
/// dividing 12 or 8, the result is exact (rational or quadratic surd). Odd
/// multiples of pi/2 are poles where cos is exactly 0, so the result is
/// exactly 0. Every other angle is evaluated in float mode.
inline ZdScalar zd_tan(const PiAngle& theta) {
    if (theta.residual == 0.0) {
        const Rational r = theta.multiple - detail::floor_rational(theta.multiple); // tan has period pi
        const auto surd = [](std::int64_t rational, std::int64_t coeff, unsigned m, std::int64_t den = 1) {
            return ZdScalar::exact(QuadSurd(Rational(rational) / den) +
                                   QuadSurd(Rational(coeff) / den) * QuadSurd::sqrt_of(Rational(m)));
        };
        struct Entry {
            std::int64_t num, den;
        };
        const Rational half(Rational(1) / 2);
        if (r == 0 || r == half)
            return ZdScalar::exact(0);
        const std::array<std::pair<Entry, ZdScalar>, 14> table{{
            {{1, 12}, surd(2, -1, 3)},
            {{1, 8}, surd(-1, 1, 2)},
            {{1, 6}, surd(0, 1, 3, 3)},
            {{1, 4}, ZdScalar::exact(1)},
            {{1, 3}, surd(0, 1, 3)},
            {{3, 8}, surd(1, 1, 2)},
            {{5, 12}, surd(2, 1, 3)},
            {{7, 12}, surd(-2, -1, 3)},
            {{5, 8}, surd(-1, -1, 2)},
            {{2, 3}, surd(0, -1, 3)},
            {{3, 4}, ZdScalar::exact(-1)},
            {{5, 6}, surd(0, -1, 3, 3)},
            {{7, 8}, surd(1, -1, 2)},
            {{11, 12}, surd(-2, 1, 3)},
        }};
        for (const auto& [e, value] : table)
            if (r == Rational(e.num) / e.den)
                return value;
        const double angle = r.convert_to<double>() * std::numbers::pi;
        return zd_div(ZdScalar::floating(std::sin(angle)), ZdScalar::floating(std::cos(angle)));
    }
    const double angle = theta.multiple.convert_to<double>() * std::numbers::pi + theta.residual;
    return zd_div(ZdScalar::floating(std::sin(angle)), ZdScalar::floating(std::cos(angle)));
}

} // namespace zdgeom
