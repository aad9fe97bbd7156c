#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace verlinde {

using Coeff = std::int64_t;

/// Raised when an exact integer result does not fit in 64 bits.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what)
        : std::overflow_error("coefficient overflow in " + what) {}
};

inline Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("addition");
    return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("subtraction");
    return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("multiplication");
    return r;
}

inline Coeff checked_neg(Coeff a) { return checked_sub(0, a); }

}  // namespace verlinde
