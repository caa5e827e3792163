#pragma once

#include "jmrep/hom.hpp"
#include "jmrep/phi2.hpp"
#include "jmrep/words.hpp"

namespace jmrep {

/// Element (r, R) of (1/2) wedge^3 H x| Sp(H). Products compose right to
/// left: (f g) acts as "g first, then f".
struct Rho2Element {
    Wedge3 r;
    SymplecticMatrix R;

    explicit Rho2Element(Genus g) : r(g), R(SymplecticMatrix::identity(g)) {}
    Rho2Element(Wedge3 r_, SymplecticMatrix R_) : r(std::move(r_)), R(std::move(R_)) {
        require_same_genus(r.genus(), R.genus(), "Rho2Element");
    }

    static Rho2Element identity(Genus g) { return Rho2Element(g); }

    Genus genus() const noexcept { return R.genus(); }

    friend bool operator==(const Rho2Element&, const Rho2Element&) = default;
};

inline Rho2Element rho2_mul(const Rho2Element& f, const Rho2Element& g) {
    require_same_genus(f.genus(), g.genus(), "rho2_mul");
    return {f.r + wedge3_sp_action(f.R, g.r), f.R * g.R};
}

/// (r, R)^{-1} = (-R^{-1} r, R^{-1}).
inline Rho2Element rho2_inv(const Rho2Element& f) {
    auto rinv = symplectic_inverse(f.R);
    return {-wedge3_sp_action(rinv, f.r), std::move(rinv)};
}

/// (r, R) * (eta, y) = (R eta - kappa(Ry) + R kappa(y) + r(Ry), Ry).
inline Phi2Element act_on_phi2(const Rho2Element& f, const Phi2Element& p) {
    require_same_genus(f.genus(), p.genus(), "act_on_phi2");
    HVector ry = f.R * p.y;
    Wedge2 eta = apply_matrix(f.R, p.eta);
    eta -= kappa(ry);
    eta += apply_matrix(f.R, kappa(p.y));
    eta += wedge3_evaluate(f.r, ry);
    return {std::move(eta), std::move(ry)};
}

/// Level-2 data of a free-group endomorphism f with f(0, x_i) = (w_i, h_i).
struct Tau2Tilde {
    /// x_i -> w_i.
    HomHW2 generator_images;
    /// The crossed homomorphism value, normalised so that (tilde, R) acts on
    /// Phi_2 by (eta, y) -> (tilde(Ry) + R eta, Ry); i.e. tilde(h_i) = w_i.
    HomHW2 tilde;
    /// Abelianisation, columns h_i.
    SymplecticMatrix R;
};

inline Tau2Tilde tau2_tilde_from_endo(const EndomorphismSpec& e) {
    const Genus g = e.genus();
    std::vector<Wedge2> w;
    std::vector<HVector> h;
    for (const auto& img : e.images()) {
        auto p = phi2_eval_word(img);
        w.push_back(std::move(p.eta));
        h.push_back(std::move(p.y));
    }
    auto m = IntMatrix::from_columns(g, h);
    if (!symplectic_check(m)) throw NotSymplectic("abelianisation of the endomorphism is not symplectic");
    SymplecticMatrix rmat(std::move(m));

    HomHW2 images(g, std::move(w));
    const auto rinv = symplectic_inverse(rmat);
    std::vector<Wedge2> tilde;
    for (int k = 0; k < g.dim(); ++k) tilde.push_back(images(rinv.matrix().column(k)));
    return {std::move(images), HomHW2(g, std::move(tilde)), std::move(rmat)};
}

/// m - R m.
inline HomHW2 principal_crossed_hom(const HomHW2& m, const SymplecticMatrix& rmat) {
    return m - sp_action_on_hom(rmat, m);
}

/// rho_2(f) = (tau_2(f), R) with tau_2 = tilde + kappa - R kappa decoded
/// into (1/2) wedge^3 H. Throws NotSymplectic or NotInWedge3.
inline Rho2Element tau2_from_endo(const EndomorphismSpec& e) {
    auto t = tau2_tilde_from_endo(e);
    const HomHW2 m = t.tilde + principal_crossed_hom(kappa_hom(e.genus()), t.R);
    return {wedge3_decode(m), std::move(t.R)};
}

/// -1/2 (sum_i a_i + b_i) ^ (sum_i a_i ^ b_i).
inline Wedge3 morita_shift(Genus g) {
    const int h = g.value();
    HVector u(g);
    Wedge2 omega(g);
    for (int i = 1; i <= h; ++i) {
        u[i - 1] = 1;
        u[i + h - 1] = 1;
        omega.add_term({i, i + h}, HalfInt::integer(1));
    }
    return (-1 * wedge3_of(u, omega)).halved();
}

/// Morita's crossed homomorphism: embed(tau_2(f)) + m - R m with m = morita_shift.
inline HomHW2 morita_tau2_prime(const Rho2Element& f) {
    return wedge3_embed(f.r) + principal_crossed_hom(wedge3_embed(morita_shift(f.genus())), f.R);
}

}  // namespace jmrep
