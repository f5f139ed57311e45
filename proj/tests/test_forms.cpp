#include <gtest/gtest.h>

#include "sp11/forms.hpp"
#include "sp11/fueter.hpp"
#include "sp11/random.hpp"
#include "sp11/samples.hpp"

using namespace sp11;

namespace {

PolyForm random_form(Rng& rng, int degree) {
    PolyForm w(degree);
    for (FormIndex i = 0; i < 16; ++i)
        if (index_degree(i) == degree) w.add(i, random_polynomial(rng, 2));
    return w;
}

}  // namespace

TEST(Forms, IndexNames) {
    EXPECT_EQ(index_name(index_from_name("xz")), "xz");
    EXPECT_EQ(index_from_name("txyz"), FormIndex(0xF));
    EXPECT_THROW(index_from_name("zx"), DomainError);
    EXPECT_THROW(HForm<QRat>(5), DegreeOverflow);
}

TEST(Forms, DqWedgeDqOracle) {
    const ConstForm w = wedge(form_dq(), form_dq());
    ConstForm expected(2);
    expected.add(index_from_name("xy"), QRat(0, 0, 0, 2));
    expected.add(index_from_name("xz"), QRat(0, 0, -2, 0));
    expected.add(index_from_name("yz"), QRat(0, 2, 0, 0));
    EXPECT_EQ(w, expected);
}

TEST(Forms, Omega0AndDqbarDq) {
    EXPECT_EQ(form_omega0().coeff(0xF), QRat::one());
    EXPECT_EQ(form_Dq().degree(), 3);
    // dq̄ ∧ dq has purely imaginary coefficients.
    const ConstForm w = form_dqbar_dq();
    for (const auto& [i, c] : w.terms()) EXPECT_EQ(c.t, Rational(0)) << index_name(i);
}

TEST(Forms, DifferentialOfCoordinate) {
    const PolyForm d = differential(QPolynomial::identity());
    EXPECT_EQ(d, to_poly_form(form_dq()));
}

TEST(Forms, RegularityCriterionOracle) {
    const PolyForm Dq = to_poly_form(form_Dq());
    const QPolynomial reg = QPolynomial::variable(1) - QRat::i() * QPolynomial::variable(0);
    EXPECT_TRUE(wedge(Dq, differential(reg)).is_zero());
    EXPECT_FALSE(wedge(Dq, differential(QPolynomial::identity())).is_zero());
}

TEST(FormsProperty, DSquaredAndLeibniz) {
    Rng rng(61);
    for (int s = 0; s < 20; ++s) {
        const int p = int(rng.uniform_int(0, 2)), q = int(rng.uniform_int(0, 4 - p - 1));
        const PolyForm a = random_form(rng, p), b = random_form(rng, q);
        EXPECT_TRUE(exterior_d(exterior_d(a)).is_zero());
        PolyForm rhs = wedge(exterior_d(a), b);
        const PolyForm second = wedge(a, exterior_d(b));
        rhs = p % 2 ? rhs - second : rhs + second;
        EXPECT_EQ(exterior_d(wedge(a, b)), rhs);
    }
}

TEST(FormsProperty, OmegaClosedForRegularPairs) {
    Rng rng(62);
    const PolyForm Dq = to_poly_form(form_Dq());
    for (int s = 0; s < 10; ++s) {
        const QPolynomial f = random_regular(rng, int(rng.uniform_int(0, 3)));
        const QPolynomial g = random_regular(rng, int(rng.uniform_int(0, 3))).star();
        // g* is right regular when g is left regular.
        ASSERT_TRUE(fueter_apply(g, FueterOp::dr_bar).is_zero());
        EXPECT_TRUE(exterior_d(Dq.left(g).right(f)).is_zero());
    }
}

TEST(FormsProperty, MobiusPullbackClosedForms) {
    Rng rng(63);
    const PointForm dq = to_point_form(form_dq()), Dq = to_point_form(form_Dq());
    for (int s = 0; s < 30; ++s) {
        const QMatDbl g = random_sp11(rng);
        const QDbl q = rng.ball_point_double();
        const auto jac = mobius_jacobian(g, q);
        EXPECT_LT(max_abs(pullback_at(jac, dq) - mobius_pullback_closed_form(g, MobiusForm::dq, q)), 1e-10);
        EXPECT_LT(max_abs(pullback_at(jac, Dq) - mobius_pullback_closed_form(g, MobiusForm::Dq, q)), 1e-10);
    }
}
