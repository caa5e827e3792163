#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "jmrep/rho2.hpp"

namespace jmrep {

using Triple = std::array<int, 3>;

/// The integers E_ijk attached to a symplectic matrix, for every sorted triple.
struct Eijk {
    Genus genus;
    std::map<Triple, std::int64_t> values;

    std::int64_t at(const Triple& t) const { return values.at(t); }
};

/// E_ijk = .(row_i(RJ), row_j(R), row_k(R)) - .(row_i(R), row_j(RJ), row_k(R))
///       + .(row_i(R), row_j(R), row_k(RJ)), where . is the triple dot product.
inline Eijk compute_E(const SymplecticMatrix& rmat) {
    const Genus g = rmat.genus();
    const IntMatrix rj = rmat.matrix() * make_J(g);
    std::vector<std::vector<std::int64_t>> r_rows, rj_rows;
    for (int i = 0; i < g.dim(); ++i) {
        r_rows.push_back(rmat.matrix().row(i));
        rj_rows.push_back(rj.row(i));
    }
    auto row = [](const auto& rows, int k) -> const std::vector<std::int64_t>& {
        return rows[static_cast<std::size_t>(k - 1)];
    };

    Eijk e{g, {}};
    for (const auto& t : sorted_tuples<3>(g)) {
        const auto [i, j, k] = t;
        std::int64_t v = triple_dot(row(rj_rows, i), row(r_rows, j), row(r_rows, k));
        v = detail::checked_sub(v, triple_dot(row(r_rows, i), row(rj_rows, j), row(r_rows, k)));
        v = detail::checked_add(v, triple_dot(row(r_rows, i), row(r_rows, j), row(rj_rows, k)));
        e.values.emplace(t, v);
    }
    return e;
}

/// Triples where 2 r_ijk and E_ijk have different parity.
inline std::vector<Triple> mcg_violations(const Rho2Element& f) {
    const auto e = compute_E(f.R);
    std::vector<Triple> out;
    for (const auto& [t, v] : e.values)
        if (detail::floor_mod(f.r.coeff(t).twice() - v, 2) != 0) out.push_back(t);
    return out;
}

/// (r, R) lies in the image of the mapping class group iff r_ijk = E_ijk / 2 mod 1
/// for every triple. For genus 1 there are no triples and every element passes.
inline bool mcg_membership(const Rho2Element& f) { return mcg_violations(f).empty(); }

/// The representative (r, R) with 2 r_ijk in {0, 1}.
inline Rho2Element canonical_lift(const SymplecticMatrix& rmat) {
    const auto e = compute_E(rmat);
    Wedge3 r(rmat.genus());
    for (const auto& [t, v] : e.values)
        if (detail::floor_mod(v, 2) == 1) r.add_term(t, HalfInt::half());
    return {std::move(r), rmat};
}

/// Upper-right g x g block is zero, i.e. R preserves the span of the b_i.
inline bool handlebody_sp_check(const SymplecticMatrix& rmat) {
    const int h = rmat.genus().value();
    for (int r = 0; r < h; ++r)
        for (int c = h; c < 2 * h; ++c)
            if (rmat(r, c) != 0) return false;
    return true;
}

struct HandlebodyReport {
    bool block_form = false;     // condition 1
    bool congruences = false;    // condition 2
    bool no_triple_a = false;    // condition 3

    bool member() const noexcept { return block_form && congruences && no_triple_a; }

    std::vector<std::string> failed() const {
        std::vector<std::string> out;
        if (!block_form) out.emplace_back("condition 1");
        if (!congruences) out.emplace_back("condition 2");
        if (!no_triple_a) out.emplace_back("condition 3");
        return out;
    }
};

inline HandlebodyReport handlebody_check(const Rho2Element& f) {
    const Genus g = f.genus();
    HandlebodyReport rep;
    rep.block_form = handlebody_sp_check(f.R);
    rep.congruences = mcg_membership(f);
    rep.no_triple_a = true;
    for (const auto& [t, c] : f.r.terms())
        if (g.is_a(t[2])) rep.no_triple_a = false;
    return rep;
}

inline bool handlebody_membership(const Rho2Element& f) { return handlebody_check(f).member(); }

/// (t, I) for every sorted triple t that is not of the form a_i ^ a_j ^ a_k.
/// These freely generate the image of the Torelli-handlebody intersection.
inline std::vector<Rho2Element> torelli_handlebody_basis(Genus g) {
    std::vector<Rho2Element> out;
    for (const auto& t : sorted_tuples<3>(g)) {
        if (g.is_a(t[2])) continue;
        out.emplace_back(Wedge3::term(g, t, HalfInt::integer(1)), SymplecticMatrix::identity(g));
    }
    return out;
}

/// Generators (0, b_i), (a_i ^ b_j, 0), (b_i ^ b_j, 0) of phi_2 of the normal
/// closure of the beta generators.
inline std::vector<Phi2Element> phi2_b_generators(Genus g) {
    const int h = g.value();
    std::vector<Phi2Element> out;
    for (int i = 1; i <= h; ++i) out.emplace_back(Wedge2(g), HVector::basis(g, g.b(i)));
    for (int i = 1; i <= h; ++i)
        for (int j = 1; j <= h; ++j)
            out.emplace_back(Wedge2::term(g, {g.a(i), g.b(j)}, HalfInt::integer(1)), HVector(g));
    for (int i = 1; i <= h; ++i)
        for (int j = i + 1; j <= h; ++j)
            out.emplace_back(Wedge2::term(g, {g.b(i), g.b(j)}, HalfInt::integer(1)), HVector(g));
    return out;
}

/// Whether f and f^{-1} both map the generators of phi_2(b) into phi_2(b).
/// The action is by group automorphisms of Phi_2, so this decides whether f
/// preserves that subgroup.
inline bool preserves_phi2_b(const Rho2Element& f) {
    const auto finv = rho2_inv(f);
    for (const auto& p : phi2_b_generators(f.genus()))
        if (!phi2_b_membership(act_on_phi2(f, p)) || !phi2_b_membership(act_on_phi2(finv, p))) return false;
    return true;
}

}  // namespace jmrep
