#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kunzsg {

using Int = std::int64_t;

enum class ErrorCode {
    EmptyGenerators,
    NonCoprimeGenerators,
    InvalidGenerator,
    NotAnElement,
    InvalidKunz,
    MultiplicityMismatch,
    DegenerateMultiplicity,
    NotASpecialGap,
    InputIsIrreducible,
    InvalidSpec,
    BoundsExceeded,
    Overflow,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every library failure is reported through this exception; `code()` is
/// stable and the message carries the offending values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

namespace checked {

inline Int add(Int a, Int b)
{
    Int r{};
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error(ErrorCode::Overflow, "integer overflow in addition");
    }
    return r;
}

inline Int mul(Int a, Int b)
{
    Int r{};
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
    }
    return r;
}

}  // namespace checked
}  // namespace kunzsg
