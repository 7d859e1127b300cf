#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pedcurve {

enum class errc {
    division_by_zero,
    unbound_variable,
    unknown_variable,
    zero_polynomial,
    bad_divisor,
    both_constant,
    degenerate_parametrization,
    not_a_conic,
    point_not_on_conic,
    point_not_on_curve,
    degenerate_line,
    no_rational_point,
    unsupported_kind,
    not_square_free,
    not_singular,
    not_cubic,
    not_double_point,
    not_quartic,
    pole_at_t0,
    sample_hits_pole,
    all_factors_rejected,
    lucky_point_not_found,
    constant_input,
    syntax_error,
    empty_window,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::division_by_zero: return "DivisionByZero";
        case errc::unbound_variable: return "UnboundVariable";
        case errc::unknown_variable: return "UnknownVariable";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::bad_divisor: return "BadDivisor";
        case errc::both_constant: return "BothConstant";
        case errc::degenerate_parametrization: return "DegenerateParametrization";
        case errc::not_a_conic: return "NotAConic";
        case errc::point_not_on_conic: return "PointNotOnConic";
        case errc::point_not_on_curve: return "PointNotOnCurve";
        case errc::degenerate_line: return "DegenerateLine";
        case errc::no_rational_point: return "NoRationalPoint";
        case errc::unsupported_kind: return "UnsupportedKind";
        case errc::not_square_free: return "NotSquareFree";
        case errc::not_singular: return "NotSingular";
        case errc::not_cubic: return "NotCubic";
        case errc::not_double_point: return "NotDoublePoint";
        case errc::not_quartic: return "NotQuartic";
        case errc::pole_at_t0: return "PoleAtT0";
        case errc::sample_hits_pole: return "SampleHitsPole";
        case errc::all_factors_rejected: return "AllFactorsRejected";
        case errc::lucky_point_not_found: return "LuckyPointNotFound";
        case errc::constant_input: return "ConstantInput";
        case errc::syntax_error: return "SyntaxError";
        case errc::empty_window: return "EmptyWindow";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what, std::size_t position = npos)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          code_(code),
          position_(position) {}

    errc code() const { return code_; }

    // Byte offset for syntax errors; npos when not applicable.
    std::size_t position() const { return position_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    errc code_;
    std::size_t position_;
};

}  // namespace pedcurve
