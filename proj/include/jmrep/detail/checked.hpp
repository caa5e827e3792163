#pragma once

#include <cstdint>

#include "jmrep/errors.hpp"

namespace jmrep::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("integer overflow in addition");
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw ArithmeticOverflow("integer overflow in subtraction");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("integer overflow in multiplication");
    return out;
}

/// Representative of `a mod m` in [0, m).
inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace jmrep::detail
