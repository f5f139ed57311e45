#include <gtest/gtest.h>

#include "sp11/group.hpp"
#include "sp11/random.hpp"
#include "sp11/samples.hpp"

using namespace sp11;

TEST(Group, SigmaAtOrigin) {
    const auto s = sigma(QRat());
    EXPECT_TRUE(is_scaled_identity(s));
    EXPECT_THROW(sigma(QRat(1, 0, 0, 0)), DomainError);
    EXPECT_THROW(sigma(QRat(1, 1, 0, 0)), DomainError);
}

TEST(Group, SigmaMovesOriginToQ) {
    const QDbl q(0.1, -0.2, 0.3, 0.05);
    const QDbl image = mobius_act(sigma_value(q), QDbl());
    EXPECT_LT(max_abs(image - q), 1e-15);
}

TEST(Group, SingularDenominatorThrows) {
    const QMatRat g{QRat::one(), {}, QRat::one(), -QRat::one()};
    EXPECT_THROW(mobius_act(g, QRat::one()), SingularDenominator);
}

TEST(Group, DaggerOracle) {
    const QMatRat g{QRat(1), QRat(2), QRat(3), QRat(4)};
    EXPECT_EQ(dagger(g), (QMatRat{QRat(4), QRat(3), QRat(2), QRat(1)}));
}

TEST(Group, Sp11InverseOfDiagonalUnits) {
    const QMatRat g = QMatRat::diag(QRat::i(), QRat::j());
    EXPECT_EQ(is_sp11(g), 0.0);
    EXPECT_EQ(g * sp11_inverse(g), QMatRat::identity());
    EXPECT_GT(is_sp11(QMatRat::diag(QRat(2), QRat(1))), 0.0);
}

TEST(GroupProperty, SigmaInverseExact) {
    Rng rng(21);
    for (int s = 0; s < 200; ++s) {
        const QRat q = rng.ball_point();
        EXPECT_TRUE(is_scaled_identity(sigma(q) * sigma(-q)));
        EXPECT_EQ(max_abs(sp11_defect(sigma(q))), 0.0);
    }
}

TEST(GroupProperty, NgammaIdentityExact) {
    Rng rng(22);
    const QMatRat h{QRat(Rational(5, 4)), QRat(Rational(3, 4)), QRat(Rational(3, 4)), QRat(Rational(5, 4))};
    ASSERT_EQ(is_sp11(h), 0.0);
    for (int s = 0; s < 200; ++s) {
        const QRat u = rational_unit(rng), v = rational_unit(rng);
        const QMatRat g = QMatRat::diag(u, v) * h * QMatRat::diag(v, u);
        ASSERT_EQ(is_sp11(g), 0.0);
        EXPECT_EQ(one_minus_norm_factor(g, rng.ball_point()), Rational(0));
    }
}

TEST(GroupProperty, ActionIsGroupAction) {
    Rng rng(23);
    for (int s = 0; s < 100; ++s) {
        const QMatDbl g1 = random_sp11(rng), g2 = random_sp11(rng);
        EXPECT_LT(is_sp11(g1), 1e-12);
        const QDbl q = rng.ball_point_double();
        const QDbl lhs = mobius_act(g1 * g2, q), rhs = mobius_act(g1, mobius_act(g2, q));
        EXPECT_LT(max_abs(lhs - rhs), 1e-10);
        EXPECT_LT(mobius_act(g1, q).norm(), 1.0);
    }
}

TEST(GroupProperty, JFactorCocycleAndUnits) {
    Rng rng(24);
    for (int s = 0; s < 100; ++s) {
        const QMatDbl g1 = random_sp11(rng), g2 = random_sp11(rng);
        const QDbl q = rng.ball_point_double();
        const KFactor j12 = j_factor(g1 * g2, q);
        const QMatDbl prod = as_matrix(j_factor(g1, mobius_act(g2, q))) * as_matrix(j_factor(g2, q));
        EXPECT_LT(max_abs(as_matrix(j12) - prod), 1e-10);
        EXPECT_NEAR(j12.u_left.norm(), 1.0, 1e-12);
        EXPECT_NEAR(j12.u_right.norm(), 1.0, 1e-12);
        const QMatDbl lhs = g1 * sigma_value(q), rhs = sigma_value(mobius_act(g1, q)) * as_matrix(j_factor(g1, q));
        EXPECT_LT(max_abs(lhs - rhs), 1e-10);
    }
}
