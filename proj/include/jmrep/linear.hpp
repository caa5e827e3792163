#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jmrep/detail/checked.hpp"
#include "jmrep/errors.hpp"
#include "jmrep/genus.hpp"

namespace jmrep {

/// Element of H = H_1(S_{g,1}) in the basis a_1..a_g, b_1..b_g.
/// operator[] is a plain 0-based coordinate accessor; basis() takes the
/// 1-based basis index used everywhere else.
class HVector {
public:
    explicit HVector(Genus g) : genus_(g), coeffs_(static_cast<std::size_t>(g.dim()), 0) {}

    HVector(Genus g, std::vector<std::int64_t> coeffs) : genus_(g), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != g.dim())
            throw OutOfRange("HVector needs " + std::to_string(g.dim()) + " coefficients, got " +
                             std::to_string(coeffs_.size()));
    }

    /// The basis vector x_k, 1 <= k <= 2g.
    static HVector basis(Genus g, int k) {
        if (k < 1 || k > g.dim()) throw OutOfRange("basis index " + std::to_string(k) + " out of range");
        HVector v(g);
        v.coeffs_[static_cast<std::size_t>(k - 1)] = 1;
        return v;
    }

    Genus genus() const noexcept { return genus_; }
    int dim() const noexcept { return genus_.dim(); }
    std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

    std::int64_t operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    std::int64_t& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

    bool is_zero() const noexcept {
        for (auto c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    HVector& operator+=(const HVector& o) {
        require_same_genus(genus_, o.genus_, "HVector addition");
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = detail::checked_add(coeffs_[i], o.coeffs_[i]);
        return *this;
    }
    HVector& operator-=(const HVector& o) {
        require_same_genus(genus_, o.genus_, "HVector subtraction");
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = detail::checked_sub(coeffs_[i], o.coeffs_[i]);
        return *this;
    }
    HVector& operator*=(std::int64_t k) {
        for (auto& c : coeffs_) c = detail::checked_mul(c, k);
        return *this;
    }
    HVector operator-() const { return HVector(*this) *= -1; }
    friend HVector operator+(HVector a, const HVector& b) { return a += b; }
    friend HVector operator-(HVector a, const HVector& b) { return a -= b; }
    friend HVector operator*(std::int64_t k, HVector a) { return a *= k; }

    friend bool operator==(const HVector&, const HVector&) = default;

private:
    Genus genus_;
    std::vector<std::int64_t> coeffs_;
};

/// Square 2g x 2g integer matrix, row-major, 0-based entry access.
class IntMatrix {
public:
    explicit IntMatrix(Genus g) : genus_(g), entries_(static_cast<std::size_t>(g.dim() * g.dim()), 0) {}

    IntMatrix(Genus g, const std::vector<std::vector<std::int64_t>>& rows) : IntMatrix(g) {
        const int n = g.dim();
        if (static_cast<int>(rows.size()) != n)
            throw OutOfRange("matrix needs " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
        for (int r = 0; r < n; ++r) {
            if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != n)
                throw OutOfRange("matrix row " + std::to_string(r + 1) + " has wrong length");
            for (int c = 0; c < n; ++c) (*this)(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
    }

    static IntMatrix identity(Genus g) {
        IntMatrix m(g);
        for (int i = 0; i < g.dim(); ++i) m(i, i) = 1;
        return m;
    }

    /// Matrix whose columns are the given vectors.
    static IntMatrix from_columns(Genus g, const std::vector<HVector>& cols) {
        if (static_cast<int>(cols.size()) != g.dim()) throw OutOfRange("wrong number of columns");
        IntMatrix m(g);
        for (int c = 0; c < g.dim(); ++c) {
            require_same_genus(g, cols[static_cast<std::size_t>(c)].genus(), "IntMatrix::from_columns");
            for (int r = 0; r < g.dim(); ++r) m(r, c) = cols[static_cast<std::size_t>(c)][r];
        }
        return m;
    }

    Genus genus() const noexcept { return genus_; }
    int dim() const noexcept { return genus_.dim(); }

    std::int64_t operator()(int r, int c) const { return entries_[index(r, c)]; }
    std::int64_t& operator()(int r, int c) { return entries_[index(r, c)]; }

    std::vector<std::int64_t> row(int r) const {
        return {entries_.begin() + r * dim(), entries_.begin() + (r + 1) * dim()};
    }
    HVector column(int c) const {
        HVector v(genus_);
        for (int r = 0; r < dim(); ++r) v[r] = (*this)(r, c);
        return v;
    }

    std::vector<std::vector<std::int64_t>> rows() const {
        std::vector<std::vector<std::int64_t>> out;
        for (int r = 0; r < dim(); ++r) out.push_back(row(r));
        return out;
    }

    IntMatrix transpose() const {
        IntMatrix t(genus_);
        for (int r = 0; r < dim(); ++r)
            for (int c = 0; c < dim(); ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    IntMatrix operator-() const {
        IntMatrix m(genus_);
        for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = detail::checked_sub(0, entries_[i]);
        return m;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        require_same_genus(a.genus_, b.genus_, "matrix product");
        IntMatrix out(a.genus_);
        const int n = a.dim();
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const auto aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < n; ++j)
                    out(i, j) = detail::checked_add(out(i, j), detail::checked_mul(aik, b(k, j)));
            }
        return out;
    }

    friend HVector operator*(const IntMatrix& m, const HVector& v) {
        require_same_genus(m.genus_, v.genus(), "matrix-vector product");
        HVector out(m.genus_);
        for (int i = 0; i < m.dim(); ++i) {
            std::int64_t acc = 0;
            for (int j = 0; j < m.dim(); ++j) acc = detail::checked_add(acc, detail::checked_mul(m(i, j), v[j]));
            out[i] = acc;
        }
        return out;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        require_same_genus(a.genus_, b.genus_, "matrix sum");
        IntMatrix out(a.genus_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = detail::checked_add(a.entries_[i], b.entries_[i]);
        return out;
    }
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r * dim() + c); }

    Genus genus_;
    std::vector<std::int64_t> entries_;
};

/// J = ( 0 -I ; I 0 ) in g x g blocks.
inline IntMatrix make_J(Genus g) {
    IntMatrix j(g);
    const int h = g.value();
    for (int i = 0; i < h; ++i) {
        j(i, i + h) = -1;
        j(i + h, i) = 1;
    }
    return j;
}

/// C = ( 0 I ; I 0 ), the handle swap a_i <-> b_i.
inline IntMatrix make_C(Genus g) {
    IntMatrix c(g);
    const int h = g.value();
    for (int i = 0; i < h; ++i) {
        c(i, i + h) = 1;
        c(i + h, i) = 1;
    }
    return c;
}

/// True iff M J M^T = J.
inline bool symplectic_check(const IntMatrix& m) {
    const auto j = make_J(m.genus());
    return m * j * m.transpose() == j;
}

/// An IntMatrix known to satisfy M J M^T = J.
class SymplecticMatrix {
public:
    explicit SymplecticMatrix(IntMatrix m) : m_(std::move(m)) {
        if (!symplectic_check(m_)) throw NotSymplectic("matrix does not satisfy M J M^T = J");
    }

    static SymplecticMatrix identity(Genus g) { return SymplecticMatrix(IntMatrix::identity(g), Trusted{}); }

    Genus genus() const noexcept { return m_.genus(); }
    int dim() const noexcept { return m_.dim(); }
    const IntMatrix& matrix() const noexcept { return m_; }
    std::int64_t operator()(int r, int c) const { return m_(r, c); }

    bool is_identity() const { return m_ == IntMatrix::identity(genus()); }

    friend SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b) {
        return SymplecticMatrix(a.m_ * b.m_, Trusted{});
    }
    friend HVector operator*(const SymplecticMatrix& a, const HVector& v) { return a.m_ * v; }

    friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

private:
    struct Trusted {};
    SymplecticMatrix(IntMatrix m, Trusted) : m_(std::move(m)) {}

    friend SymplecticMatrix symplectic_inverse(const SymplecticMatrix& m);

    IntMatrix m_;
};

/// M^{-1} = J M^T J^{-1}, with J^{-1} = -J.
inline SymplecticMatrix symplectic_inverse(const SymplecticMatrix& m) {
    const auto j = make_J(m.genus());
    return SymplecticMatrix(j * m.m_.transpose() * (-j), SymplecticMatrix::Trusted{});
}

struct BlockConstraints {
    bool qst_minus_ptt_is_identity = false;  // Q S^T - P T^T = I
    bool stt_symmetric = false;              // S T^T symmetric
    bool pqt_symmetric = false;              // P Q^T symmetric

    bool all() const noexcept { return qst_minus_ptt_is_identity && stt_symmetric && pqt_symmetric; }
};

/// Evaluates the three block identities for M = ( S T ; P Q ).
inline BlockConstraints block_constraints(const IntMatrix& m) {
    const int h = m.genus().value();
    using Block = std::vector<std::vector<std::int64_t>>;
    auto block = [&](int r0, int c0) {
        Block b(static_cast<std::size_t>(h), std::vector<std::int64_t>(static_cast<std::size_t>(h)));
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < h; ++c) b[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m(r0 + r, c0 + c);
        return b;
    };
    // X * Y^T
    auto mul_t = [&](const Block& x, const Block& y) {
        Block out(static_cast<std::size_t>(h), std::vector<std::int64_t>(static_cast<std::size_t>(h), 0));
        for (std::size_t r = 0; r < out.size(); ++r)
            for (std::size_t c = 0; c < out.size(); ++c)
                for (std::size_t k = 0; k < out.size(); ++k)
                    out[r][c] = detail::checked_add(out[r][c], detail::checked_mul(x[r][k], y[c][k]));
        return out;
    };
    auto symmetric = [](const Block& b) {
        for (std::size_t r = 0; r < b.size(); ++r)
            for (std::size_t c = 0; c < r; ++c)
                if (b[r][c] != b[c][r]) return false;
        return true;
    };
    const Block s = block(0, 0), t = block(0, h), p = block(h, 0), q = block(h, h);

    BlockConstraints out;
    const Block qs = mul_t(q, s), pt = mul_t(p, t);
    out.qst_minus_ptt_is_identity = true;
    for (std::size_t r = 0; r < qs.size(); ++r)
        for (std::size_t c = 0; c < qs.size(); ++c)
            if (detail::checked_sub(qs[r][c], pt[r][c]) != (r == c ? 1 : 0)) out.qst_minus_ptt_is_identity = false;
    out.stt_symmetric = symmetric(mul_t(s, t));
    out.pqt_symmetric = symmetric(mul_t(p, q));
    return out;
}

inline BlockConstraints block_constraints(const SymplecticMatrix& m) { return block_constraints(m.matrix()); }

/// Intersection pairing <u, v> = v^T J u, so that <a_i, b_i> = +1 and
/// <R x_n, x_k> = (J R)_{kn}.
inline std::int64_t pairing(const HVector& u, const HVector& v) {
    require_same_genus(u.genus(), v.genus(), "pairing");
    const int h = u.genus().value();
    // (J u)_k is -u_{k+g} for k <= g and u_{k-g} for k > g.
    std::int64_t acc = 0;
    for (int k = 0; k < h; ++k) {
        acc = detail::checked_sub(acc, detail::checked_mul(v[k], u[k + h]));
        acc = detail::checked_add(acc, detail::checked_mul(v[k + h], u[k]));
    }
    return acc;
}

/// sum_i w_i y_i z_i.
inline std::int64_t triple_dot(std::span<const std::int64_t> w, std::span<const std::int64_t> y,
                               std::span<const std::int64_t> z) {
    if (w.size() != y.size() || w.size() != z.size()) throw OutOfRange("triple_dot: length mismatch");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        acc = detail::checked_add(acc, detail::checked_mul(detail::checked_mul(w[i], y[i]), z[i]));
    return acc;
}

/// Symplectic transvection x -> x + k <x, v> v.
inline SymplecticMatrix make_transvection(const HVector& v, std::int64_t k = 1) {
    const Genus g = v.genus();
    IntMatrix m = IntMatrix::identity(g);
    for (int c = 0; c < g.dim(); ++c) {
        const auto p = detail::checked_mul(k, pairing(HVector::basis(g, c + 1), v));
        if (p == 0) continue;
        for (int r = 0; r < g.dim(); ++r) m(r, c) = detail::checked_add(m(r, c), detail::checked_mul(p, v[r]));
    }
    return SymplecticMatrix(std::move(m));
}

}  // namespace jmrep
