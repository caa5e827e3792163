#pragma once

#include <string>
#include <vector>

#include "jmrep/detail/exact_solve.hpp"
#include "jmrep/linear.hpp"
#include "jmrep/wedge.hpp"

namespace jmrep {

/// Element of Hom(H, (1/2) wedge^2 H), given by the images of x_1..x_{2g}.
class HomHW2 {
public:
    explicit HomHW2(Genus g) : genus_(g), images_(static_cast<std::size_t>(g.dim()), Wedge2(g)) {}

    HomHW2(Genus g, std::vector<Wedge2> images) : genus_(g), images_(std::move(images)) {
        if (static_cast<int>(images_.size()) != g.dim()) throw OutOfRange("HomHW2 needs one image per basis vector");
        for (const auto& w : images_) require_same_genus(g, w.genus(), "HomHW2");
    }

    Genus genus() const noexcept { return genus_; }
    const std::vector<Wedge2>& images() const noexcept { return images_; }

    /// Image of the basis vector x_k, 1-based.
    const Wedge2& image(int k) const {
        if (k < 1 || k > genus_.dim()) throw OutOfRange("basis index " + std::to_string(k) + " out of range");
        return images_[static_cast<std::size_t>(k - 1)];
    }

    Wedge2 operator()(const HVector& y) const {
        require_same_genus(genus_, y.genus(), "HomHW2 evaluation");
        Wedge2 out(genus_);
        for (int t = 0; t < y.dim(); ++t)
            if (y[t] != 0) out += y[t] * images_[static_cast<std::size_t>(t)];
        return out;
    }

    bool is_zero() const noexcept {
        for (const auto& w : images_)
            if (!w.is_zero()) return false;
        return true;
    }

    HomHW2& operator+=(const HomHW2& o) {
        require_same_genus(genus_, o.genus_, "HomHW2 addition");
        for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += o.images_[i];
        return *this;
    }
    HomHW2& operator-=(const HomHW2& o) {
        require_same_genus(genus_, o.genus_, "HomHW2 subtraction");
        for (std::size_t i = 0; i < images_.size(); ++i) images_[i] -= o.images_[i];
        return *this;
    }
    friend HomHW2 operator+(HomHW2 a, const HomHW2& b) { return a += b; }
    friend HomHW2 operator-(HomHW2 a, const HomHW2& b) { return a -= b; }

    friend bool operator==(const HomHW2&, const HomHW2&) = default;

private:
    Genus genus_;
    std::vector<Wedge2> images_;
};

/// r(y) for r in (1/2) wedge^3 H viewed as a homomorphism:
/// (x_i ^ x_j ^ x_k)(y) = <y,x_k> x_i^x_j + <y,x_i> x_j^x_k + <y,x_j> x_k^x_i.
inline Wedge2 wedge3_evaluate(const Wedge3& r, const HVector& y) {
    require_same_genus(r.genus(), y.genus(), "wedge3_evaluate");
    const Genus g = r.genus();
    // <y, x_k> = (J y)_k
    std::vector<std::int64_t> jy(static_cast<std::size_t>(g.dim()));
    for (int k = 1; k <= g.dim(); ++k) jy[static_cast<std::size_t>(k - 1)] = pairing(y, HVector::basis(g, k));
    auto p = [&](int k) { return jy[static_cast<std::size_t>(k - 1)]; };

    Wedge2 out(g);
    for (const auto& [idx, c] : r.terms()) {
        const auto [i, j, k] = idx;
        if (p(k) != 0) out.add_term({i, j}, c * p(k));
        if (p(i) != 0) out.add_term({j, k}, c * p(i));
        if (p(j) != 0) out.add_term({k, i}, c * p(j));
    }
    return out;
}

inline HomHW2 wedge3_embed(const Wedge3& r) {
    const Genus g = r.genus();
    std::vector<Wedge2> images;
    images.reserve(static_cast<std::size_t>(g.dim()));
    for (int k = 1; k <= g.dim(); ++k) images.push_back(wedge3_evaluate(r, HVector::basis(g, k)));
    return HomHW2(g, std::move(images));
}

/// Left inverse of wedge3_embed, by an exact linear solve over every
/// coefficient of every basis image. Throws NotInWedge3 when h is not in the
/// image of (1/2) wedge^3 H.
inline Wedge3 wedge3_decode(const HomHW2& h) {
    using detail::Rational;
    const Genus g = h.genus();
    const auto triples = sorted_tuples<3>(g);
    const auto pairs = sorted_tuples<2>(g);

    // Column t holds embed(x_t) for the t-th triple.
    std::vector<HomHW2> columns;
    columns.reserve(triples.size());
    for (const auto& t : triples) columns.push_back(wedge3_embed(Wedge3::term(g, t, HalfInt::integer(1))));

    detail::RationalSystem sys;
    sys.unknowns = triples.size();
    for (int n = 1; n <= g.dim(); ++n)
        for (const auto& p : pairs) {
            std::vector<Rational> row;
            row.reserve(triples.size());
            bool nonzero = false;
            for (const auto& col : columns) {
                const auto c = col.image(n).coeff(p);
                row.emplace_back(Rational(c.twice()) / 2);
                nonzero = nonzero || !c.is_zero();
            }
            const auto target = h.image(n).coeff(p);
            if (!nonzero && target.is_zero()) continue;
            sys.rows.push_back(std::move(row));
            sys.rhs.emplace_back(Rational(target.twice()) / 2);
        }

    const auto solution = detail::solve_exact(std::move(sys));
    if (!solution) throw NotInWedge3("homomorphism is not in the image of (1/2) wedge^3 H");

    Wedge3 r(g);
    for (std::size_t t = 0; t < triples.size(); ++t) {
        const Rational twice = (*solution)[t] * 2;
        if (boost::multiprecision::denominator(twice) != 1)
            throw NotInWedge3("decoded coefficient has denominator other than 1 or 2");
        r.add_term(triples[t], HalfInt::from_twice(static_cast<std::int64_t>(boost::multiprecision::numerator(twice))));
    }
    return r;
}

/// (R m)(y) = R m(R^{-1} y).
inline HomHW2 sp_action_on_hom(const SymplecticMatrix& rmat, const HomHW2& m) {
    require_same_genus(rmat.genus(), m.genus(), "sp_action_on_hom");
    const auto rinv = symplectic_inverse(rmat);
    std::vector<Wedge2> images;
    images.reserve(static_cast<std::size_t>(m.genus().dim()));
    for (int k = 0; k < m.genus().dim(); ++k) images.push_back(apply_matrix(rmat, m(rinv.matrix().column(k))));
    return HomHW2(m.genus(), std::move(images));
}

/// R(x_i ^ x_j ^ x_k) = R x_i ^ R x_j ^ R x_k.
inline Wedge3 wedge3_sp_action(const SymplecticMatrix& rmat, const Wedge3& r) { return apply_matrix(rmat, r); }

/// kappa(a_i) = 1/2 a_i ^ b_i, kappa(b_i) = -1/2 a_i ^ b_i, extended linearly.
inline Wedge2 kappa(const HVector& y) {
    const Genus g = y.genus();
    const int h = g.value();
    Wedge2 out(g);
    for (int i = 0; i < h; ++i) {
        const auto twice = detail::checked_sub(y[i], y[i + h]);
        if (twice != 0) out.add_term({i + 1, i + 1 + h}, HalfInt::from_twice(twice));
    }
    return out;
}

inline HomHW2 kappa_hom(Genus g) {
    std::vector<Wedge2> images;
    for (int k = 1; k <= g.dim(); ++k) images.push_back(kappa(HVector::basis(g, k)));
    return HomHW2(g, std::move(images));
}

}  // namespace jmrep
