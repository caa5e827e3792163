#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "jmrep/detail/checked.hpp"

namespace jmrep {

/// Exact element of (1/2)Z stored as its double: value = twice / 2.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(std::int64_t twice) noexcept {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    static HalfInt integer(std::int64_t n) { return from_twice(detail::checked_mul(n, 2)); }
    static constexpr HalfInt half() noexcept { return from_twice(1); }

    constexpr std::int64_t twice() const noexcept { return twice_; }
    constexpr bool is_zero() const noexcept { return twice_ == 0; }
    constexpr bool is_integral() const noexcept { return twice_ % 2 == 0; }

    HalfInt operator-() const { return from_twice(detail::checked_sub(0, twice_)); }
    HalfInt& operator+=(HalfInt o) {
        twice_ = detail::checked_add(twice_, o.twice_);
        return *this;
    }
    HalfInt& operator-=(HalfInt o) {
        twice_ = detail::checked_sub(twice_, o.twice_);
        return *this;
    }
    HalfInt& operator*=(std::int64_t k) {
        twice_ = detail::checked_mul(twice_, k);
        return *this;
    }
    friend HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
    friend HalfInt operator*(HalfInt a, std::int64_t k) { return a *= k; }
    friend HalfInt operator*(std::int64_t k, HalfInt a) { return a *= k; }

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    std::string to_string() const {
        if (is_integral()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }
    friend std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

private:
    std::int64_t twice_ = 0;
};

}  // namespace jmrep
