#include <gtest/gtest.h>

#include "jmrep/phi2.hpp"
#include "jmrep/words.hpp"
#include "support/generators.hpp"

namespace jmrep {
namespace {

using testing::Rng;

TEST(FreeWord, RejectsBadLetters) {
    EXPECT_THROW(FreeWord(Genus(1), {3}), OutOfRange);
    EXPECT_THROW(FreeWord(Genus(1), {0}), OutOfRange);
    EXPECT_NO_THROW(FreeWord(Genus(1), {-2}));
}

TEST(WordReduce, Examples) {
    const Genus g(2);
    EXPECT_TRUE(word_reduce(FreeWord(g, {1, -1})).empty());
    EXPECT_TRUE(word_reduce(FreeWord(g, {1, 2, -2, -1})).empty());
    EXPECT_EQ(word_reduce(FreeWord(g, {1, 2, -1})), FreeWord(g, {1, 2, -1}));
}

TEST(WordReduce, IdempotentAndReduced) {
    Rng rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        const Genus g(testing::uniform_int(rng, 1, 3));
        const auto r = word_reduce(testing::random_word(rng, g, 30));
        EXPECT_EQ(word_reduce(r), r);
        for (std::size_t i = 1; i < r.size(); ++i) EXPECT_NE(r.letters()[i], -r.letters()[i - 1]);
    }
}

const EndomorphismSpec& a1_times_b1() {
    static const EndomorphismSpec e(Genus(2), {FreeWord(Genus(2), {1, 3}), FreeWord(Genus(2), {2}), FreeWord(Genus(2), {3}),
                                               FreeWord(Genus(2), {4})});
    return e;
}

TEST(EndoApply, Examples) {
    const Genus g(2);
    Rng rng(52);
    const auto w = testing::random_word(rng, g, 10);
    EXPECT_EQ(endo_apply(EndomorphismSpec::identity(g), w), word_reduce(w));
    EXPECT_EQ(endo_apply(a1_times_b1(), FreeWord(g, {1})), FreeWord(g, {1, 3}));
    EXPECT_EQ(endo_apply(a1_times_b1(), FreeWord(g, {-1})), FreeWord(g, {-3, -1}));
}

TEST(EndoApply, HomomorphismLaw) {
    Rng rng(53);
    const Genus g(2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto u = testing::random_word(rng, g, 10), v = testing::random_word(rng, g, 10);
        const auto& e = a1_times_b1();
        EXPECT_EQ(endo_apply(e, u * v), word_reduce(endo_apply(e, u) * endo_apply(e, v)));
    }
}

TEST(EndoApply, LengthGuard) {
    const Genus g(1);
    const EndomorphismSpec doubling(g, {FreeWord(g, {1, 1}), FreeWord(g, {2})});
    FreeWord w(g, {1});
    EXPECT_THROW(
        {
            for (int i = 0; i < 20; ++i) w = endo_apply(doubling, w);
        },
        WordTooLong);
    EXPECT_THROW(endo_apply(doubling, FreeWord(g, {1, 1, 1}), 5), WordTooLong);
    EXPECT_EQ(endo_apply(doubling, FreeWord(g, {1, 1}), 4).size(), 4u);
}

TEST(EndoCompose, OrderAndIdentity) {
    const Genus g(2);
    const auto id = EndomorphismSpec::identity(g);
    const auto& e = a1_times_b1();
    EXPECT_EQ(endo_compose(id, e), e);
    EXPECT_EQ(endo_compose(e, id), e);

    const EndomorphismSpec inv(g, {FreeWord(g, {1, -3}), FreeWord(g, {2}), FreeWord(g, {3}), FreeWord(g, {4})});
    EXPECT_EQ(endo_compose(e, inv), id);
    EXPECT_EQ(endo_compose(inv, e), id);

    // compose(e1, e2) applies e2 first.
    const EndomorphismSpec swap_b(g, {FreeWord(g, {1}), FreeWord(g, {2}), FreeWord(g, {4}), FreeWord(g, {3})});
    Rng rng(54);
    for (int trial = 0; trial < 50; ++trial) {
        const auto w = testing::random_word(rng, g, 10);
        EXPECT_EQ(endo_apply(endo_compose(e, swap_b), w), endo_apply(e, endo_apply(swap_b, w)));
    }
    EXPECT_EQ(endo_compose(e, swap_b).image(1), FreeWord(g, {1, 3}));
    EXPECT_EQ(endo_compose(swap_b, e).image(1), FreeWord(g, {1, 4}));
}

TEST(BoundaryWord, Examples) {
    EXPECT_EQ(boundary_word(Genus(1)), FreeWord(Genus(1), {1, 2, -1, -2}));
    EXPECT_EQ(boundary_word(Genus(2)), FreeWord(Genus(2), {1, 3, -1, -3, 2, 4, -2, -4}));
    for (int gv = 1; gv <= 4; ++gv) {
        const Genus g(gv);
        const auto p = phi2_eval_word(boundary_word(g));
        Wedge2 omega(g);
        for (int i = 1; i <= gv; ++i) omega.add_term({g.a(i), g.b(i)}, HalfInt::integer(1));
        EXPECT_EQ(p, Phi2Element(omega, HVector(g)));
    }
}

}  // namespace
}  // namespace jmrep
