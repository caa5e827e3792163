#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "jmrep/genus.hpp"
#include "jmrep/half_int.hpp"
#include "jmrep/linear.hpp"

namespace jmrep {

/// Element of (1/2) wedge^K H, stored sparsely on strictly increasing
/// 1-based index tuples. Zero coefficients are never stored, so structural
/// equality is equality of elements.
template <int K>
class Wedge {
public:
    using Index = std::array<int, K>;
    using Terms = std::map<Index, HalfInt>;

    explicit Wedge(Genus g) : genus_(g) {}

    /// c * x_{idx[0]} ^ ... ^ x_{idx[K-1]}; idx need not be sorted.
    static Wedge term(Genus g, Index idx, HalfInt c) {
        Wedge w(g);
        w.add_term(idx, c);
        return w;
    }

    Genus genus() const noexcept { return genus_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_integral() const noexcept {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integral(); });
    }

    /// Coefficient at a sorted index tuple; absent means zero.
    HalfInt coeff(const Index& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? HalfInt{} : it->second;
    }

    /// Adds c * x_{idx...}, reordering the indices with the matching sign.
    Wedge& add_term(Index idx, HalfInt c) {
        for (int k : idx)
            if (k < 1 || k > genus_.dim())
                throw OutOfRange("wedge index " + std::to_string(k) + " out of range for genus " +
                                 std::to_string(genus_.value()));
        bool odd = false;
        for (int i = 0; i < K; ++i)
            for (int j = 0; j + 1 < K - i; ++j)
                if (idx[j] > idx[j + 1]) {
                    std::swap(idx[j], idx[j + 1]);
                    odd = !odd;
                }
        for (int i = 0; i + 1 < K; ++i)
            if (idx[i] == idx[i + 1]) return *this;
        accumulate(idx, odd ? -c : c);
        return *this;
    }

    Wedge& operator+=(const Wedge& o) {
        require_same_genus(genus_, o.genus_, "wedge addition");
        for (const auto& [idx, c] : o.terms_) accumulate(idx, c);
        return *this;
    }
    Wedge& operator-=(const Wedge& o) {
        require_same_genus(genus_, o.genus_, "wedge subtraction");
        for (const auto& [idx, c] : o.terms_) accumulate(idx, -c);
        return *this;
    }
    Wedge& operator*=(std::int64_t k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [idx, c] : terms_) c *= k;
        return *this;
    }
    Wedge operator-() const { return Wedge(*this) *= -1; }
    friend Wedge operator+(Wedge a, const Wedge& b) { return a += b; }
    friend Wedge operator-(Wedge a, const Wedge& b) { return a -= b; }
    friend Wedge operator*(std::int64_t k, Wedge a) { return a *= k; }

    /// Divides by two. Only integral wedges can be halved inside (1/2)Z.
    Wedge halved() const {
        Wedge out(genus_);
        for (const auto& [idx, c] : terms_) {
            if (c.twice() % 2 != 0) throw OutOfRange("halving leaves (1/2)Z");
            out.terms_.emplace(idx, HalfInt::from_twice(c.twice() / 2));
        }
        return out;
    }

    friend bool operator==(const Wedge&, const Wedge&) = default;

private:
    void accumulate(const Index& idx, HalfInt c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(idx, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Genus genus_;
    Terms terms_;
};

using Wedge2 = Wedge<2>;
using Wedge3 = Wedge<3>;

/// u ^ v, with integer coefficient u_i v_j - u_j v_i on x_i ^ x_j.
inline Wedge2 wedge2_of(const HVector& u, const HVector& v) {
    require_same_genus(u.genus(), v.genus(), "wedge2_of");
    Wedge2 w(u.genus());
    const int n = u.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto c = detail::checked_sub(detail::checked_mul(u[i], v[j]), detail::checked_mul(u[j], v[i]));
            if (c != 0) w.add_term({i + 1, j + 1}, HalfInt::integer(c));
        }
    return w;
}

/// u ^ eta in (1/2) wedge^3 H.
inline Wedge3 wedge3_of(const HVector& u, const Wedge2& eta) {
    require_same_genus(u.genus(), eta.genus(), "wedge3_of");
    Wedge3 w(u.genus());
    for (int i = 0; i < u.dim(); ++i) {
        if (u[i] == 0) continue;
        for (const auto& [idx, c] : eta.terms()) w.add_term({i + 1, idx[0], idx[1]}, c * u[i]);
    }
    return w;
}

/// R(x_{i1} ^ ... ^ x_{iK}) = R x_{i1} ^ ... ^ R x_{iK}, extended linearly.
template <int K>
Wedge<K> apply_matrix(const IntMatrix& m, const Wedge<K>& w) {
    require_same_genus(m.genus(), w.genus(), "matrix action on wedge");
    Wedge<K> out(w.genus());
    const int n = m.dim();
    for (const auto& [idx, c] : w.terms()) {
        // Expand the product of columns idx[0..K) of m, skipping zero entries.
        std::array<int, K> rows{};
        auto expand = [&](auto&& self, int depth, HalfInt acc) -> void {
            if (depth == K) {
                out.add_term(rows, acc);
                return;
            }
            const int col = idx[static_cast<std::size_t>(depth)] - 1;
            for (int r = 0; r < n; ++r) {
                const auto e = m(r, col);
                if (e == 0) continue;
                rows[static_cast<std::size_t>(depth)] = r + 1;
                self(self, depth + 1, acc * e);
            }
        };
        expand(expand, 0, c);
    }
    return out;
}

template <int K>
Wedge<K> apply_matrix(const SymplecticMatrix& m, const Wedge<K>& w) {
    return apply_matrix(m.matrix(), w);
}

/// Every sorted index tuple 1 <= i_1 < ... < i_K <= 2g.
template <int K>
std::vector<std::array<int, K>> sorted_tuples(Genus g) {
    std::vector<std::array<int, K>> out;
    std::array<int, K> cur{};
    auto rec = [&](auto&& self, int depth, int start) -> void {
        if (depth == K) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= g.dim(); ++i) {
            cur[static_cast<std::size_t>(depth)] = i;
            self(self, depth + 1, i + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

}  // namespace jmrep
