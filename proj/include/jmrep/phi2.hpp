#pragma once

#include <cstdlib>

#include "jmrep/hom.hpp"
#include "jmrep/words.hpp"

namespace jmrep {

/// Element (eta, y) of the 2-step nilpotent group Phi_2 with product
/// (eta, y)(nu, z) = (eta + nu + 1/2 y^z, y + z).
struct Phi2Element {
    Wedge2 eta;
    HVector y;

    explicit Phi2Element(Genus g) : eta(g), y(g) {}
    Phi2Element(Wedge2 eta_, HVector y_) : eta(std::move(eta_)), y(std::move(y_)) {
        require_same_genus(eta.genus(), y.genus(), "Phi2Element");
    }

    Genus genus() const noexcept { return y.genus(); }

    friend bool operator==(const Phi2Element&, const Phi2Element&) = default;
};

inline Phi2Element phi2_mul(const Phi2Element& p, const Phi2Element& q) {
    require_same_genus(p.genus(), q.genus(), "phi2_mul");
    return {p.eta + q.eta + wedge2_of(p.y, q.y).halved(), p.y + q.y};
}

inline Phi2Element phi2_inv(const Phi2Element& p) { return {-p.eta, -p.y}; }

/// phi_2 on a word: the product of (0, x_k)^{+-1} over its letters.
inline Phi2Element phi2_eval_word(const FreeWord& w) {
    const Genus g = w.genus();
    Phi2Element acc(g);
    for (int l : w.letters()) {
        HVector step(g);
        step[std::abs(l) - 1] = l > 0 ? 1 : -1;
        acc = phi2_mul(acc, Phi2Element(Wedge2(g), std::move(step)));
    }
    return acc;
}

/// Membership in phi_2(pi): with y = sum l_i x_i, every coefficient of eta
/// on x_i ^ x_j is n_ij + l_i l_j / 2 for an integer n_ij.
inline bool phi2_pi_membership(const Phi2Element& p) {
    const int n = p.genus().dim();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const auto twice = p.eta.coeff({i, j}).twice();
            const auto li = p.y[i - 1], lj = p.y[j - 1];
            if (detail::floor_mod(twice, 2) != detail::floor_mod(li % 2 * (lj % 2), 2)) return false;
        }
    return true;
}

/// Membership in phi_2 of the normal closure of the beta generators: y has
/// no a-component, eta has no a^a terms, integral a^b terms, and b_i^b_j
/// coefficients n_ij + l_i l_j / 2 with l the b-coordinates of y.
inline bool phi2_b_membership(const Phi2Element& p) {
    const Genus g = p.genus();
    const int h = g.value();
    for (int i = 0; i < h; ++i)
        if (p.y[i] != 0) return false;
    for (int i = 1; i <= g.dim(); ++i)
        for (int j = i + 1; j <= g.dim(); ++j) {
            const auto twice = p.eta.coeff({i, j}).twice();
            if (g.is_a(j)) {
                if (twice != 0) return false;
            } else if (g.is_a(i)) {
                if (twice % 2 != 0) return false;
            } else {
                const auto li = p.y[i - 1], lj = p.y[j - 1];
                if (detail::floor_mod(twice, 2) != detail::floor_mod(li % 2 * (lj % 2), 2)) return false;
            }
        }
    return true;
}

/// A word w with phi2_eval_word(w) == p, for p in phi_2(pi): generator
/// powers in index order fix the H-coordinate, then central commutators
/// [xi_i, xi_j]^{n_ij} fix the wedge coordinate.
inline FreeWord phi2_synthesize_word(const Phi2Element& p) {
    if (!phi2_pi_membership(p)) throw OutOfRange("element is not in phi_2(pi)");
    const Genus g = p.genus();
    std::vector<int> letters;
    for (int k = 1; k <= g.dim(); ++k) {
        const auto l = p.y[k - 1];
        for (std::int64_t t = 0; t < std::abs(l); ++t) letters.push_back(l > 0 ? k : -k);
    }
    const Wedge2 rest = p.eta - phi2_eval_word(FreeWord(g, letters)).eta;
    for (const auto& [idx, c] : rest.terms()) {
        const auto n = c.twice() / 2;  // integral by membership
        const auto [i, j] = idx;
        for (std::int64_t t = 0; t < std::abs(n); ++t) {
            if (n > 0)
                letters.insert(letters.end(), {i, j, -i, -j});
            else
                letters.insert(letters.end(), {j, i, -j, -i});
        }
    }
    return FreeWord(g, std::move(letters));
}

}  // namespace jmrep
