#pragma once

#include <stdexcept>
#include <string>

namespace zdgeom {

enum class errc {
    mode_mismatch,    // operands carry different numeric modes
    non_finite,       // a float-mode result would be inf or NaN
    negative_operand, // square root of a negative value
    irrational,       // exact result leaves the supported quadratic fields
    empty_curve,      // operation requires a non-empty generalized circle
    invalid_argument, // precondition on a parameter violated
    no_bracket,       // root finder failed to bracket a sign change
    parse_error,
};

inline const char* to_string(errc code) noexcept {
    switch (code) {
    case errc::mode_mismatch: return "ModeMismatch";
    case errc::non_finite: return "NonFinite";
    case errc::negative_operand: return "NegativeOperand";
    case errc::irrational: return "Irrational";
    case errc::empty_curve: return "EmptyCurve";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::no_bracket: return "NoBracket";
    case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

/// Single exception type for the library; `code()` tells callers which
/// contract was broken so they can react (e.g. fall back to float mode on
/// errc::irrational).
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace zdgeom
