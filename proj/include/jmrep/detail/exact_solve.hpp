#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace jmrep::detail {

using Rational = boost::multiprecision::cpp_rational;

/// Dense system A x = b over Q.
struct RationalSystem {
    std::size_t unknowns = 0;
    std::vector<std::vector<Rational>> rows;  // each row has `unknowns` entries
    std::vector<Rational> rhs;
};

/// Gauss-Jordan elimination in exact rational arithmetic. Returns nullopt
/// when the system is inconsistent; free variables (rank deficiency) are set
/// to zero.
inline std::optional<std::vector<Rational>> solve_exact(RationalSystem sys) {
    auto& a = sys.rows;
    auto& b = sys.rhs;
    const std::size_t m = a.size();
    const std::size_t n = sys.unknowns;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;

    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[rank]);
        std::swap(b[piv], b[rank]);

        const Rational inv = 1 / a[rank][col];
        for (std::size_t c = col; c < n; ++c)
            if (a[rank][c] != 0) a[rank][c] *= inv;
        b[rank] *= inv;

        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c < n; ++c)
                if (a[rank][c] != 0) a[r][c] -= f * a[rank][c];
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    for (std::size_t r = rank; r < m; ++r)
        if (b[r] != 0) return std::nullopt;

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

}  // namespace jmrep::detail
