#include <gtest/gtest.h>

#include "sp11/arith.hpp"

using namespace sp11;

namespace {

// r(n) = 24 Σ_{d | n, d odd} d
std::size_t hurwitz_count(long n) {
    long s = 0;
    for (long d = 1; d <= n; d += 2)
        if (n % d == 0) s += d;
    return std::size_t(24 * s);
}

}  // namespace

TEST(Arith, OrderMembership) {
    EXPECT_TRUE(order_contains(QRat(1, 2, 3, 4)));
    EXPECT_TRUE(order_contains(hurwitz_omega()));
    EXPECT_FALSE(order_contains(QRat(Rational(1, 2), Rational(1, 2), 0, 0)));
    EXPECT_FALSE(order_contains(QRat(Rational(1, 3), 0, 0, 0)));
    EXPECT_THROW(OrderElement::from(QRat(Rational(1, 2), 0, 0, 0)), DomainError);
}

TEST(Arith, OrderCoordinatesRoundTrip) {
    const QRat q(Rational(3, 2), Rational(-1, 2), Rational(5, 2), Rational(1, 2));
    const OrderElement e = OrderElement::from(q);
    EXPECT_EQ(e.value(), q);
    EXPECT_EQ(OrderElement::from(hurwitz_omega()).c, (std::array<long, 4>{0, 0, 0, 1}));
}

TEST(Arith, OmegaHasOrderSix) {
    const QRat w = hurwitz_omega();
    EXPECT_EQ(w * w * w, -QRat::one());
    EXPECT_EQ(w * w * w * w * w * w, QRat::one());
}

TEST(Arith, HurwitzCountsMatchDivisorFormula) {
    EXPECT_EQ(hurwitz_units().size(), 24u);
    for (long n = 1; n <= 8; ++n) {
        const auto v = hurwitz_of_norm(n);
        EXPECT_EQ(v.size(), hurwitz_count(n)) << n;
        for (const auto& q : v) EXPECT_EQ(q.norm(), Rational(n));
    }
}

TEST(Arith, FiniteDiagonalSubgroup) {
    const auto F = finite_diagonal_subgroup();
    EXPECT_EQ(F.size(), 36u);
    for (const auto& g : F) {
        EXPECT_EQ(gz_membership(g), 0.0);
        for (const auto& h : F) EXPECT_EQ(g * h, h * g);
    }
}

TEST(Arith, HeightOneIsDiagonalUnits) {
    const auto found = search_gz(1);
    EXPECT_EQ(found.size(), 576u);
    for (const auto& g : found) {
        EXPECT_TRUE(g.matrix().b.is_zero_q());
        EXPECT_TRUE(g.matrix().c.is_zero_q());
    }
}

TEST(Arith, IntegralGroupElementRejects) {
    EXPECT_THROW(IntegralGroupElement(QMatRat::diag(QRat(2), QRat(1))), DomainError);
    EXPECT_THROW(IntegralGroupElement(QMatRat::diag(QRat(Rational(1, 2)), QRat(1))), DomainError);
    EXPECT_NO_THROW(IntegralGroupElement(QMatRat::diag(hurwitz_omega(), QRat::j())));
    EXPECT_THROW(Level(0), ConfigError);
}

TEST(Arith, GammaTwoAtHeightFour) {
    const auto found = search_gz(4);
    std::size_t in_gamma = 0;
    for (const auto& g : found) {
        const bool a = gammaN_membership(g, Level(2));
        EXPECT_EQ(a, gammaN_by_reduction(g, Level(2)));
        in_gamma += a;
        EXPECT_TRUE(gammaN_membership(g, Level(1)));
    }
    // ±I and ±diag(1, -1)
    EXPECT_EQ(in_gamma, 4u);
}

TEST(Arith, GammaMembershipOracle) {
    const IntegralGroupElement minus(QMatRat::diag(-QRat::one(), -QRat::one()));
    EXPECT_TRUE(gammaN_membership(minus, Level(2)));
    EXPECT_FALSE(gammaN_membership(minus, Level(3)));
    const IntegralGroupElement unit(QMatRat::diag(QRat::i(), QRat::one()));
    EXPECT_FALSE(gammaN_membership(unit, Level(2)));
    EXPECT_FALSE(gammaN_by_reduction(unit, Level(2)));
}
