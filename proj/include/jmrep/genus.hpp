#pragma once

#include <compare>
#include <string>

#include "jmrep/errors.hpp"

namespace jmrep {

/// Genus of the one-boundary surface. The homology H has rank dim() = 2g,
/// with basis x_1..x_g = a_1..a_g and x_{g+1}..x_{2g} = b_1..b_g.
class Genus {
public:
    explicit Genus(int g) : g_(g) {
        if (g < 1) throw OutOfRange("genus must be >= 1, got " + std::to_string(g));
    }

    int value() const noexcept { return g_; }
    int dim() const noexcept { return 2 * g_; }

    /// Basis index (1-based) of a_i and b_i.
    int a(int i) const { return check_handle(i); }
    int b(int i) const { return check_handle(i) + g_; }

    /// True when 1-based basis index k is one of the a_i.
    bool is_a(int k) const noexcept { return k >= 1 && k <= g_; }

    friend bool operator==(Genus, Genus) = default;
    friend auto operator<=>(Genus, Genus) = default;

private:
    int check_handle(int i) const {
        if (i < 1 || i > g_) throw OutOfRange("handle index " + std::to_string(i) + " out of range");
        return i;
    }

    int g_;
};

inline void require_same_genus(Genus lhs, Genus rhs, const char* where) {
    if (lhs != rhs) throw GenusMismatch(where);
}

}  // namespace jmrep
