#ifndef KODCALC_CHECKED_HPP
#define KODCALC_CHECKED_HPP

// Exact 64-bit integer arithmetic. Overflow is a hard error, never wraparound.

#include <cstdint>

#include "kodcalc/errors.hpp"

namespace kodcalc {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw error(errc::overflow, "integer overflow in addition");
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out))
        throw error(errc::overflow, "integer overflow in subtraction");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw error(errc::overflow, "integer overflow in multiplication");
    return out;
}

// Exact quotient a/b; a remainder raises `on_remainder`.
inline std::int64_t exact_div(std::int64_t a, std::int64_t b, errc on_remainder,
                              const char* what) {
    if (b == 0) throw error(errc::internal, "division by zero");
    if (a % b != 0) throw error(on_remainder, what);
    return a / b;
}

// Non-negative gcd; gcd(0, 0) = 0.
inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    auto mag = [](std::int64_t v) {
        return v < 0 ? checked_mul(v, -1) : v;
    };
    a = mag(a);
    b = mag(b);
    while (b != 0) {
        const std::int64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

} // namespace kodcalc

#endif
