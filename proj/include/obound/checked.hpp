#ifndef OBOUND_CHECKED_HPP
#define OBOUND_CHECKED_HPP

#include <cstdint>
#include <limits>

#include "obound/error.hpp"

namespace obound {

/// Integer width used for every semigroup value and index.
using Int = std::int64_t;

[[nodiscard]] inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer overflow in addition");
    return r;
}

[[nodiscard]] inline Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer overflow in subtraction");
    return r;
}

[[nodiscard]] inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer overflow in multiplication");
    return r;
}

/// base^exp with exp >= 0.
[[nodiscard]] inline Int checked_pow(Int base, Int exp)
{
    if (exp < 0) throw Error(Errc::InvalidArgument, "negative exponent");
    Int r = 1;
    for (Int e = 0; e < exp; ++e) r = checked_mul(r, base);
    return r;
}

/// Largest e with base^e <= x. Requires base >= 2, x >= 1.
[[nodiscard]] inline Int floor_log(Int base, Int x)
{
    if (base < 2 || x < 1) throw Error(Errc::InvalidArgument, "floor_log needs base >= 2 and x >= 1");
    Int e = 0;
    Int p = 1;
    // p <= x holds on entry to each iteration
    while (p <= x / base) {
        p *= base;
        ++e;
    }
    return e;
}

/// Smallest e with base^e >= x. Requires base >= 2, x >= 1.
[[nodiscard]] inline Int ceil_log(Int base, Int x)
{
    if (base < 2 || x < 1) throw Error(Errc::InvalidArgument, "ceil_log needs base >= 2 and x >= 1");
    Int e = 0;
    Int p = 1;
    while (p < x) {
        if (p > std::numeric_limits<Int>::max() / base) return e + 1;
        p *= base;
        ++e;
    }
    return e;
}

} // namespace obound

#endif // OBOUND_CHECKED_HPP
