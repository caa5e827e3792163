#include <gtest/gtest.h>

#include <limits>

#include "jmrep/linear.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace jmrep {
namespace {

using testing::Rng;

TEST(Genus, RejectsNonPositive) {
    EXPECT_THROW(Genus(0), OutOfRange);
    EXPECT_EQ(Genus(3).dim(), 6);
    EXPECT_EQ(Genus(3).b(2), 5);
    EXPECT_THROW(Genus(2).a(3), OutOfRange);
}

TEST(MakeJ, GenusOne) {
    EXPECT_EQ(make_J(Genus(1)), IntMatrix(Genus(1), {{0, -1}, {1, 0}}));
}

TEST(MakeJ, GenusTwoBlockForm) {
    EXPECT_EQ(make_J(Genus(2)), IntMatrix(Genus(2), {{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
}

TEST(MakeJ, SquaresToMinusIdentity) {
    const Genus g(1);
    EXPECT_EQ(make_J(g) * make_J(g), -IntMatrix::identity(g));
}

TEST(MakeC, SwapsHandles) {
    EXPECT_EQ(make_C(Genus(1)), IntMatrix(Genus(1), {{0, 1}, {1, 0}}));
    for (int g = 1; g <= 4; ++g) EXPECT_EQ(make_C(Genus(g)) * make_C(Genus(g)), IntMatrix::identity(Genus(g)));
    const Genus g2(2);
    EXPECT_EQ(make_C(g2) * HVector(g2, {1, 0, 0, 0}), HVector(g2, {0, 0, 1, 0}));
}

TEST(SymplecticCheck, Examples) {
    const Genus g(2);
    EXPECT_TRUE(symplectic_check(IntMatrix::identity(g)));
    EXPECT_TRUE(symplectic_check(make_J(g)));
    IntMatrix two = IntMatrix::identity(g);
    for (int i = 0; i < g.dim(); ++i) two(i, i) = 2;
    EXPECT_FALSE(symplectic_check(two));
    EXPECT_THROW(SymplecticMatrix{two}, NotSymplectic);
}

TEST(SymplecticInverse, Examples) {
    const Genus g(1);
    EXPECT_EQ(symplectic_inverse(SymplecticMatrix::identity(g)), SymplecticMatrix::identity(g));
    EXPECT_EQ(symplectic_inverse(SymplecticMatrix(make_J(g))).matrix(), IntMatrix(g, {{0, 1}, {-1, 0}}));

    const SymplecticMatrix t(IntMatrix(g, {{1, 1}, {0, 1}}));
    const auto inv = symplectic_inverse(t);
    EXPECT_EQ(inv.matrix(), IntMatrix(g, {{1, -1}, {0, 1}}));
    EXPECT_EQ((t * inv).matrix(), IntMatrix::identity(g));
}

TEST(SymplecticInverse, MatchesBlockFormula) {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Genus g(testing::uniform_int(rng, 1, 3));
        const auto m = testing::random_symplectic(rng, g, 8);
        const auto inv = symplectic_inverse(m);
        const int h = g.value();
        // ( S T ; P Q )^{-1} = ( Q^T -T^T ; -P^T S^T )
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < h; ++c) {
                EXPECT_EQ(inv(r, c), m(h + c, h + r));
                EXPECT_EQ(inv(r, h + c), -m(c, h + r));
                EXPECT_EQ(inv(h + r, c), -m(h + c, r));
                EXPECT_EQ(inv(h + r, h + c), m(c, r));
            }
        EXPECT_TRUE((m * inv).is_identity());
        EXPECT_TRUE((inv * m).is_identity());
    }
}

// Adjugate of an integer matrix by cofactor expansion; for det 1 this is the inverse.
std::int64_t det(const oracle::Mat& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c] == 0) continue;
        oracle::Mat minor;
        for (std::size_t r = 1; r < n; ++r) {
            oracle::Vec row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(a[r][k]);
            minor.push_back(row);
        }
        acc += (c % 2 == 0 ? 1 : -1) * a[0][c] * det(minor);
    }
    return acc;
}

oracle::Mat adjugate(const oracle::Mat& a) {
    const std::size_t n = a.size();
    oracle::Mat adj(n, oracle::Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            oracle::Mat minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                oracle::Vec row;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != j) row.push_back(a[r][k]);
                minor.push_back(row);
            }
            adj[j][i] = ((i + j) % 2 == 0 ? 1 : -1) * det(minor);
        }
    return adj;
}

TEST(SymplecticInverse, AgreesWithAdjugate) {
    Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const Genus g(testing::uniform_int(rng, 1, 3));
        const auto m = testing::random_symplectic(rng, g, 6);
        const auto a = oracle::to_mat(m.matrix());
        ASSERT_EQ(det(a), 1);
        EXPECT_EQ(oracle::to_mat(symplectic_inverse(m).matrix()), adjugate(a));
    }
}

TEST(BlockConstraints, Examples) {
    const Genus g(2);
    EXPECT_TRUE(block_constraints(IntMatrix::identity(g)).all());
    EXPECT_TRUE(block_constraints(make_J(g)).all());
    IntMatrix bad = IntMatrix::identity(g);
    bad(0, 2) = 1;
    bad(0, 3) = 1;  // S T^T no longer symmetric
    EXPECT_FALSE(block_constraints(bad).stt_symmetric);
}

TEST(BlockConstraints, HoldForRandomSymplectic) {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Genus g(testing::uniform_int(rng, 1, 3));
        EXPECT_TRUE(block_constraints(testing::random_symplectic(rng, g, 10)).all());
    }
}

TEST(Pairing, BasisValues) {
    const Genus g(2);
    const auto a1 = HVector::basis(g, g.a(1)), a2 = HVector::basis(g, g.a(2)), b1 = HVector::basis(g, g.b(1));
    EXPECT_EQ(pairing(a1, b1), 1);
    EXPECT_EQ(pairing(b1, a1), -1);
    EXPECT_EQ(pairing(a1, a2), 0);
    EXPECT_THROW(pairing(a1, HVector::basis(Genus(1), 1)), GenusMismatch);
}

TEST(Pairing, MatchesJRIdentity) {
    // <R x_n, x_k> = (J R)_{kn}
    Rng rng(14);
    const Genus g(2);
    const auto r = testing::random_symplectic(rng, g, 6);
    const auto jr = make_J(g) * r.matrix();
    for (int n = 1; n <= g.dim(); ++n)
        for (int k = 1; k <= g.dim(); ++k)
            EXPECT_EQ(pairing(r * HVector::basis(g, n), HVector::basis(g, k)), jr(k - 1, n - 1));
}

TEST(Pairing, SymplecticInvariance) {
    Rng rng(15);
    for (int trial = 0; trial < 200; ++trial) {
        const Genus g(testing::uniform_int(rng, 1, 3));
        const auto r = testing::random_symplectic(rng, g, 6);
        const auto u = testing::random_hvector(rng, g), v = testing::random_hvector(rng, g);
        EXPECT_EQ(pairing(r * u, r * v), pairing(u, v));
        EXPECT_EQ(pairing(u, v), -pairing(v, u));
        const oracle::Vec uv(u.coeffs().begin(), u.coeffs().end()), vv(v.coeffs().begin(), v.coeffs().end());
        EXPECT_EQ(pairing(u, v), oracle::pairing(uv, vv, g.value()));
    }
}

TEST(TripleDot, Examples) {
    const std::vector<std::int64_t> w{1, 2, 3}, y{1, 1, 1}, z{0, 1, 0};
    EXPECT_EQ(triple_dot(w, y, z), 2);
    EXPECT_EQ(triple_dot(std::vector<std::int64_t>{1, 0, 0}, std::vector<std::int64_t>{0, 1, 0},
                         std::vector<std::int64_t>{0, 0, 5}),
              0);
    EXPECT_EQ(triple_dot(w, y, z), triple_dot(y, w, z));
    EXPECT_THROW(triple_dot(w, y, std::vector<std::int64_t>{1}), OutOfRange);
}

TEST(Transvection, AlongB1) {
    const Genus g(2);
    const auto t = make_transvection(HVector::basis(g, g.b(1)));
    EXPECT_EQ(t * HVector::basis(g, g.a(1)), HVector(g, {1, 0, 1, 0}));
    EXPECT_EQ(t * HVector::basis(g, g.b(1)), HVector::basis(g, g.b(1)));
    EXPECT_EQ(t * HVector::basis(g, g.a(2)), HVector::basis(g, g.a(2)));
}

TEST(Overflow, IsReported) {
    const Genus g(1);
    HVector big(g, {std::numeric_limits<std::int64_t>::max(), 0});
    EXPECT_THROW(big += HVector(g, {1, 0}), ArithmeticOverflow);
}

}  // namespace
}  // namespace jmrep
