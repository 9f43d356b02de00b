#pragma once

#include <stdexcept>
#include <string>

namespace brylinski {

enum class ErrorCode {
    usage,
    singular_jet,
    domain,
    undefined_frame,
    inflection,
    out_of_half_plane,
    pole_proximity,
    order_budget,
    not_a_pole,
    parse,
    curve_validation,
    verification,
};

/// Machine-readable tag printed on the diagnostic stream, e.g. "E_POLE".
const char* error_code_name(ErrorCode code) noexcept;

/// Process exit status the CLI uses for an error of this kind.
int error_exit_status(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* code_name() const noexcept { return error_code_name(code_); }

private:
    ErrorCode code_;
};

/// Raised when s lies within the pole guard of a lattice pole; carries the pole location.
class PoleProximityError : public Error {
public:
    PoleProximityError(int pole, const std::string& message)
        : Error(ErrorCode::pole_proximity, message), pole_(pole) {}

    int pole() const noexcept { return pole_; }

private:
    int pole_;
};

inline const char* error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::usage: return "E_USAGE";
    case ErrorCode::singular_jet: return "E_SINGULAR_JET";
    case ErrorCode::domain: return "E_DOMAIN";
    case ErrorCode::undefined_frame: return "E_UNDEFINED_FRAME";
    case ErrorCode::inflection: return "E_INFLECTION";
    case ErrorCode::out_of_half_plane: return "E_HALF_PLANE";
    case ErrorCode::pole_proximity: return "E_POLE";
    case ErrorCode::order_budget: return "E_ORDER_BUDGET";
    case ErrorCode::not_a_pole: return "E_NOT_A_POLE";
    case ErrorCode::parse: return "E_PARSE";
    case ErrorCode::curve_validation: return "E_CURVE";
    case ErrorCode::verification: return "E_VERIFY";
    }
    return "E_UNKNOWN";
}

inline int error_exit_status(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::parse: return 2;
    case ErrorCode::pole_proximity: return 3;
    case ErrorCode::verification: return 5;
    default: return 4;
    }
}

} // namespace brylinski
