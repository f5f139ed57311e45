#include <gtest/gtest.h>

#include "sp11/quaternion.hpp"
#include "sp11/random.hpp"

using namespace sp11;

TEST(Quaternion, MultiplicationTable) {
    const QRat one = QRat::one(), i = QRat::i(), j = QRat::j(), k = QRat::k();
    EXPECT_EQ(i * i, -one);
    EXPECT_EQ(j * j, -one);
    EXPECT_EQ(k * k, -one);
    EXPECT_EQ(i * j * k, -one);
    EXPECT_EQ(i * j, k);
    EXPECT_EQ(j * k, i);
    EXPECT_EQ(k * i, j);
    EXPECT_EQ(j * i, -k);
}

TEST(Quaternion, KnownProduct) {
    // (1 + 2i + 3j + 4k)(5 + 6i + 7j + 8k) = -60 + 12i + 30j + 24k
    const QRat p(1, 2, 3, 4), q(5, 6, 7, 8);
    EXPECT_EQ(p * q, QRat(-60, 12, 30, 24));
}

TEST(Quaternion, ConjNormTrace) {
    const QRat q(Rational(1, 2), -1, 3, Rational(-5, 4));
    const auto r = conj_norm_trace(q);
    EXPECT_EQ(r.conj, QRat(Rational(1, 2), 1, -3, Rational(5, 4)));
    EXPECT_EQ(r.norm, Rational(1, 4) + 1 + 9 + Rational(25, 16));
    EXPECT_EQ(r.trace, Rational(1));
    EXPECT_EQ(q * q.conj(), QRat(r.norm));
}

TEST(Quaternion, InverseAndPrime) {
    const QRat q(1, 1, 0, 0);
    EXPECT_EQ(q * q.inverse(), QRat::one());
    EXPECT_EQ(prime(q), QRat(Rational(1, 4), Rational(-1, 4), 0, 0));
    EXPECT_THROW(QRat().inverse(), ZeroDivisor);
    EXPECT_THROW(QDbl(1e-20, 0, 0, 0).inverse(1e-12), ZeroDivisor);
}

TEST(Quaternion, IotaOracle) {
    using M = Matrix2<GaussRational>;
    const GaussRational o(1, 0), z(0, 0), im(0, 1), mo(-1, 0), mim(0, -1);
    EXPECT_EQ(iota(QRat::i()), (M{{{im, z}, {z, mim}}}));
    EXPECT_EQ(iota(QRat::j()), (M{{{z, o}, {mo, z}}}));
    EXPECT_EQ(iota(QRat::k()), (M{{{z, im}, {im, z}}}));
}

TEST(Quaternion, SplitJoinRoundTrip) {
    const QRat q(1, 2, 3, 4);
    const auto [zc, wc] = split_zjw(q);
    EXPECT_EQ(join_zjw(zc, wc), q);
    // q = z + ĵ w
    const QRat zq(zc.re, zc.im, 0, 0), wq(wc.re, wc.im, 0, 0);
    EXPECT_EQ(zq + QRat::j() * wq, q);
}

TEST(QuaternionProperty, NormMultiplicativeExact) {
    Rng rng(11);
    for (int s = 0; s < 300; ++s) {
        const QRat p = rng.rational_quaternion(), q = rng.rational_quaternion();
        EXPECT_EQ((p * q).norm(), p.norm() * q.norm());
        EXPECT_EQ((p * q).conj(), q.conj() * p.conj());
    }
}

TEST(QuaternionProperty, AssociativeExact) {
    Rng rng(12);
    for (int s = 0; s < 200; ++s) {
        const QRat a = rng.rational_quaternion(), b = rng.rational_quaternion(), c = rng.rational_quaternion();
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(QuaternionProperty, IotaHomomorphismDetTrace) {
    Rng rng(13);
    for (int s = 0; s < 200; ++s) {
        const QRat p = rng.rational_quaternion(), q = rng.rational_quaternion();
        EXPECT_EQ(iota(p * q), iota(p) * iota(q));
        const auto m = iota(q);
        const GaussRational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        EXPECT_EQ(det, GaussRational(q.norm(), 0));
        EXPECT_EQ(m[0][0] + m[1][1], GaussRational(q.trace(), 0));
        EXPECT_EQ(iota_inverse(m), q);
    }
}

TEST(Rng, Deterministic) {
    Rng a(99), b(99);
    for (int s = 0; s < 50; ++s) EXPECT_EQ(a.rational_quaternion(), b.rational_quaternion());
    Rng c(5);
    for (int s = 0; s < 200; ++s) {
        const Rational r = c.rational(16);
        EXPECT_LE(abs(r), Rational(1));
        EXPECT_LE(r.get_den(), 16);
        EXPECT_LT(c.ball_point().norm(), Rational(9, 16));
    }
}
