#include <gtest/gtest.h>

#include "sp11/fueter.hpp"
#include "sp11/random.hpp"
#include "sp11/samples.hpp"

using namespace sp11;

namespace {
const QPolynomial t = QPolynomial::variable(0), x = QPolynomial::variable(1), y = QPolynomial::variable(2),
                  z = QPolynomial::variable(3);
QPolynomial dbar(const QPolynomial& f) { return fueter_apply(f, FueterOp::dl_bar); }
}  // namespace

TEST(Fueter, IdentityIsNotRegular) {
    // ∂̄_l q = 1 + î² + ĵ² + k̂² = -2
    EXPECT_EQ(dbar(QPolynomial::identity()), QPolynomial(QRat(-2)));
}

TEST(Fueter, FueterVariablesRegular) {
    EXPECT_TRUE(dbar(x - QRat::i() * t).is_zero());
    EXPECT_TRUE(dbar(y - QRat::j() * t).is_zero());
    EXPECT_TRUE(dbar(z - QRat::k() * t).is_zero());
}

TEST(Fueter, ComplexCoordinates) {
    EXPECT_EQ(z_coord(), t + QRat::i() * x);
    EXPECT_EQ(w_coord(), y + QRat::i() * z);
    EXPECT_EQ(z_coord() + w_coord() * QRat::j(), QPolynomial::identity());
    EXPECT_EQ(d_z(z_coord() * z_coord()), QPolynomial(QRat(2)) * z_coord());
    EXPECT_TRUE(d_zbar(z_coord()).is_zero());
}

TEST(Fueter, PklLowDegree) {
    EXPECT_EQ(p_kl(1, 0, 0), z_coord());
    EXPECT_EQ(p_kl(1, 1, 0), w_coord());
    EXPECT_EQ(p_kl(1, 1, 1), -zbar_coord());
    EXPECT_EQ(q_kl(1, 1, 1), -zbar_coord() - QRat::j() * wbar_coord());
    EXPECT_EQ(divided_power(z_coord(), 2), z_coord() * z_coord() * QRat(Rational(1, 2)));
    EXPECT_TRUE(divided_power(z_coord(), -1).is_zero());
}

TEST(Fueter, QRegularAndHomogeneous) {
    for (int n = 0; n <= 5; ++n)
        for (int l = 0; l <= n; ++l)
            for (int k = 0; k <= l; ++k) {
                EXPECT_TRUE(dbar(q_kl(n, k, l)).is_zero()) << n << k << l;
                EXPECT_TRUE(p_kl(n, k, l).is_homogeneous(n));
            }
}

TEST(Fueter, MinimalKTypeRegular) {
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& c : minimal_ktype(n, k).h) EXPECT_TRUE(dbar(c).is_zero());
}

TEST(Fueter, InvolutionsOracle) {
    const QPolynomial f = QRat::i() * x + QRat::j() * y;
    EXPECT_EQ(involution(f, Involution::bar), f.conj());
    EXPECT_EQ(involution(QPolynomial::identity(), Involution::dag), QPolynomial::identity().conj());
}

TEST(FueterProperty, LaplacianFactorization) {
    Rng rng(51);
    for (int s = 0; s < 20; ++s) {
        const QPolynomial f = random_polynomial(rng, 4);
        EXPECT_EQ(fueter_apply(dbar(f), FueterOp::dl), laplacian(f));
        EXPECT_EQ(dbar(fueter_apply(f, FueterOp::dl)), laplacian(f));
    }
}

TEST(FueterProperty, RandomRegularIsRegular) {
    Rng rng(52);
    for (int s = 0; s < 20; ++s) {
        const QPolynomial f = random_regular(rng, int(rng.uniform_int(0, 4)));
        EXPECT_TRUE(dbar(f).is_zero());
    }
}

TEST(FueterProperty, DiracDiagramAgrees) {
    Rng rng(53);
    for (int s = 0; s < 20; ++s) {
        const VnFunction f = random_vn_function(rng, int(rng.uniform_int(1, 3)), 2);
        EXPECT_EQ(dirac_lz_tensor_path(f), dirac_lz_operator_path(f));
        EXPECT_NO_THROW(dirac_lz(f));
    }
}

TEST(FueterProperty, EvaluationMatchesCompiled) {
    Rng rng(54);
    for (int s = 0; s < 20; ++s) {
        const QPolynomial f = random_polynomial(rng, 3);
        const QRat q = rng.rational_quaternion();
        const QDbl exact = to_double(f.evaluate(q));
        EXPECT_LT(max_abs(CompiledPolynomial(f)(to_double(q)) - exact), 1e-12);
    }
}
