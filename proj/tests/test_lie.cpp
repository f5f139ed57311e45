#include <gtest/gtest.h>

#include "sp11/lie.hpp"
#include "sp11/random.hpp"

using namespace sp11;

TEST(Lie, KillingSu2) {
    Matrix<Rational> expected(3, 3);
    for (std::size_t i = 0; i < 3; ++i) expected(i, i) = -8;
    EXPECT_EQ(killing_matrix(Algebra::su2), expected);
}

TEST(Lie, KillingSp11) {
    Matrix<Rational> expected(10, 10);
    for (std::size_t i = 0; i < 10; ++i) expected(i, i) = i < 6 ? -12 : 24;
    EXPECT_EQ(killing_matrix(Algebra::sp11), expected);
}

TEST(Lie, RootSystem) {
    const auto rs = roots();
    ASSERT_EQ(rs.size(), 8u);
    int compact = 0;
    for (const auto& mu : rs) {
        EXPECT_TRUE(is_root(mu));
        EXPECT_TRUE(is_root(-mu));
        compact += is_compact_root(mu);
    }
    EXPECT_EQ(compact, 4);
    EXPECT_FALSE(is_root({0, 0}));
}

TEST(Lie, RootNormalizations) {
    for (const auto& mu : roots()) {
        const RootVector e = root_vector(mu), f = root_vector(-mu);
        const auto b = killing_root(e, f);
        ASSERT_TRUE(b.has_value());
        EXPECT_EQ(*b, GaussRational(1, 0));
        EXPECT_EQ(bracket_root(e, f), cartan_element(mu));
        for (const auto& nu : roots()) {
            if (nu == mu) continue;
            const auto other = killing_root(e, root_vector(-nu));
            if (other) EXPECT_EQ(*other, GaussRational(0, 0));
        }
    }
    EXPECT_THROW(root_vector({0, 0}), NotARoot);
}

TEST(Lie, DecomposeRejectsNonMembers) {
    EXPECT_THROW(decompose(QMatRat::identity()), BasisDecompositionError);
}

TEST(LieProperty, JacobiAndInvariance) {
    Rng rng(31);
    auto random_vec = [&] {
        LieVector v;
        for (auto& c : v.c) c = rng.rational(8);
        return v;
    };
    for (int s = 0; s < 20; ++s) {
        const LieVector x = random_vec(), y = random_vec(), z = random_vec();
        const LieVector jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        EXPECT_TRUE(jac.is_zero_vec());
        EXPECT_EQ(killing(bracket(x, y), z), killing(x, bracket(y, z)));
        EXPECT_EQ(killing(x, y), killing(y, x));
    }
}
