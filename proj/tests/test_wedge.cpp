#include <gtest/gtest.h>

#include "jmrep/wedge.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace jmrep {
namespace {

using testing::Rng;

HalfInt I(std::int64_t n) { return HalfInt::integer(n); }

TEST(HalfInt, Arithmetic) {
    const auto h = HalfInt::half();
    EXPECT_FALSE(h.is_integral());
    EXPECT_TRUE((h + h).is_integral());
    EXPECT_EQ(h + h, I(1));
    EXPECT_EQ((h * 3).twice(), 3);
    EXPECT_EQ((h * 3).to_string(), "3/2");
    EXPECT_EQ((-I(2)).to_string(), "-2");
}

TEST(Wedge, CanonicalFormSortsWithSign) {
    const Genus g(2);
    Wedge2 w(g);
    w.add_term({3, 1}, I(2));
    EXPECT_EQ(w.coeff({1, 3}), I(-2));
    w.add_term({1, 3}, I(2));
    EXPECT_TRUE(w.is_zero());
    EXPECT_TRUE(w.terms().empty());

    Wedge3 t(g);
    t.add_term({2, 1, 3}, I(1));
    t.add_term({1, 1, 3}, I(5));  // repeated index vanishes
    EXPECT_EQ(t, Wedge3::term(g, {1, 2, 3}, I(-1)));
    EXPECT_THROW(t.add_term({1, 2, 5}, I(1)), OutOfRange);
}

TEST(Wedge2Of, Examples) {
    const Genus g(2);
    const auto a1 = HVector::basis(g, g.a(1)), b1 = HVector::basis(g, g.b(1));
    const auto w = wedge2_of(a1, b1);
    EXPECT_EQ(w, Wedge2::term(g, {1, 3}, I(1)));
    EXPECT_TRUE(wedge2_of(a1 + b1, a1 + b1).is_zero());
    EXPECT_EQ(wedge2_of(a1 + b1, b1), w);
}

TEST(Wedge2Of, BilinearAntisymmetric) {
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const Genus g(testing::uniform_int(rng, 1, 3));
        const auto u = testing::random_hvector(rng, g), v = testing::random_hvector(rng, g),
                   z = testing::random_hvector(rng, g);
        EXPECT_EQ(wedge2_of(u, v), -wedge2_of(v, u));
        EXPECT_EQ(wedge2_of(u + z, v), wedge2_of(u, v) + wedge2_of(z, v));
    }
}

TEST(ApplyMatrix, TransvectionOnTriple) {
    // a1 -> a1 + b1 applied to a1^a2^b2 gives a1^a2^b2 + b1^a2^b2 = a1^a2^b2 - a2^b1^b2.
    const Genus g(2);
    const auto t = make_transvection(HVector::basis(g, g.b(1)));
    Wedge3 expected(g);
    expected.add_term({1, 2, 4}, I(1));
    expected.add_term({2, 3, 4}, I(-1));
    EXPECT_EQ(apply_matrix(t, Wedge3::term(g, {1, 2, 4}, I(1))), expected);
    EXPECT_EQ(oracle::sp_action3(t.matrix(), Wedge3::term(g, {1, 2, 4}, I(1))), expected);
}

TEST(ApplyMatrix, MatchesDenseTensorOracle) {
    Rng rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        const Genus g(testing::uniform_int(rng, 2, 3));
        const auto r = testing::random_symplectic(rng, g, 5);
        const auto w3 = testing::random_wedge3(rng, g);
        const auto w2 = testing::random_wedge2(rng, g);
        EXPECT_EQ(apply_matrix(r, w3), oracle::sp_action3(r.matrix(), w3));
        EXPECT_EQ(apply_matrix(r, w2), oracle::sp_action2(r.matrix(), w2));
    }
}

TEST(ApplyMatrix, IsMultiplicative) {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const Genus g(3);
        const auto r1 = testing::random_symplectic(rng, g, 4), r2 = testing::random_symplectic(rng, g, 4);
        const auto w = testing::random_wedge3(rng, g);
        EXPECT_EQ(apply_matrix(r1 * r2, w), apply_matrix(r1, apply_matrix(r2, w)));
    }
}

TEST(SortedTuples, Counts) {
    EXPECT_EQ(sorted_tuples<3>(Genus(1)).size(), 0u);
    EXPECT_EQ(sorted_tuples<3>(Genus(2)).size(), 4u);
    EXPECT_EQ(sorted_tuples<3>(Genus(3)).size(), 20u);
    EXPECT_EQ(sorted_tuples<2>(Genus(3)).size(), 15u);
}

TEST(Wedge3Of, MoritaShiftShape) {
    // u ^ omega for u = a1 + b1, omega = a2 ^ b2 in genus 2.
    const Genus g(2);
    const auto w = wedge3_of(HVector(g, {1, 0, 1, 0}), Wedge2::term(g, {2, 4}, I(1)));
    Wedge3 expected(g);
    expected.add_term({1, 2, 4}, I(1));
    expected.add_term({2, 3, 4}, I(-1));
    EXPECT_EQ(w, expected);
}

}  // namespace
}  // namespace jmrep
