#pragma once

#include <stdexcept>
#include <string>

namespace unilattice {

enum class ErrorCode {
    invalid_argument,
    domain,
    numerical,
    cap_exceeded,
    io,
    unsupported,
    internal,
};

/// Single exception type used by the core; the C layer maps `code()` to a status value.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

/// Comparison tolerances shared by every module. Tests may pass their own.
struct Tolerances {
    double structural = 1e-9;
    double algebraic = 1e-12;
};

inline constexpr Tolerances default_tolerances{};

}  // namespace unilattice
