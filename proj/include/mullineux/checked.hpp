#pragma once

#include <cstdint>
#include <stdexcept>

namespace mullineux {

// Counts and series coefficients are int64; overflow is a hard error, never a wrap.

inline std::int64_t checked_add(std::int64_t x, std::int64_t y)
{
    std::int64_t out;
    if (__builtin_add_overflow(x, y, &out))
        throw std::overflow_error("int64 overflow in addition");
    return out;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y)
{
    std::int64_t out;
    if (__builtin_sub_overflow(x, y, &out))
        throw std::overflow_error("int64 overflow in subtraction");
    return out;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y)
{
    std::int64_t out;
    if (__builtin_mul_overflow(x, y, &out))
        throw std::overflow_error("int64 overflow in multiplication");
    return out;
}

/// Floor modulus into [0, m).
inline int mod_floor(int x, int m)
{
    int r = x % m;
    return r < 0 ? r + m : r;
}

} // namespace mullineux
