#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sp11/fueter.hpp"
#include "sp11/quadrature.hpp"
#include "sp11/random.hpp"
#include "sp11/samples.hpp"

using namespace sp11;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Quadrature, GaussLegendreTwoPoint) {
    const auto gl = gauss_legendre(2);
    ASSERT_EQ(gl.nodes.size(), 2u);
    EXPECT_NEAR(std::fabs(gl.nodes[0]), 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(gl.weights[0], 1.0, 1e-15);
    EXPECT_NEAR(gl.weights[1], 1.0, 1e-15);
}

TEST(Quadrature, GaussLegendreExactness) {
    for (int n = 1; n <= 20; ++n) {
        const auto gl = gauss_legendre(n);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += gl.weights[i] * std::pow(gl.nodes[i], k);
            const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
            EXPECT_NEAR(s, exact, 1e-13) << n << " " << k;
        }
    }
}

TEST(Quadrature, SphereArea) {
    for (double r : {0.25, 0.5, 2.0}) {
        const SphereRule rule = sphere_rule(QDbl(0.1, 0, 0, 0), r, 4);
        double area = 0.0;
        for (const auto& node : rule.nodes) {
            area += node.weight;
            EXPECT_NEAR(max_abs(node.point - rule.center) > 0 ? std::sqrt((node.point - rule.center).norm()) : 0.0, r,
                        1e-12);
        }
        EXPECT_NEAR(area, 2 * kPi * kPi * r * r * r, 1e-10 * r * r * r);
    }
}

TEST(Quadrature, KernelOracle) {
    EXPECT_LT(max_abs(cauchy_kernel(QDbl(2, 0, 0, 0)) - QDbl(0.125, 0, 0, 0)), 1e-16);
    EXPECT_THROW(cauchy_kernel(QDbl()), ZeroDivisor);
}

TEST(Quadrature, ReproducesConstantsAndLinear) {
    const QDbl q0(0.1, -0.2, 0.05, 0.3);
    EXPECT_LT(max_abs(cauchy_fueter_value(QPolynomial(QRat::one()), q0, 0.5, 3) - QDbl::one()), 1e-12);
    const QPolynomial f = QPolynomial::variable(1) - QRat::i() * QPolynomial::variable(0);
    EXPECT_LT(max_abs(cauchy_fueter_value(f, q0, 0.5, 3) - CompiledPolynomial(f)(q0)), 1e-12);
}

TEST(QuadratureProperty, ReproductionAtLevelFive) {
    Rng rng(71);
    for (int s = 0; s < 5; ++s) {
        const QPolynomial f = random_regular(rng, int(rng.uniform_int(0, 4)));
        const QDbl q0 = rng.ball_point_double(0.5);
        const QDbl exact = CompiledPolynomial(f)(q0);
        const QDbl approx = cauchy_fueter_value(f, q0, 0.5, 5);
        EXPECT_LT(max_abs(approx - exact) / std::max(1.0, std::sqrt(exact.norm())), 1e-5);
        EXPECT_LT(max_abs(laurent_b(f, QPolynomial(QRat::one()), sphere_rule(q0, 0.5, 5))), 1e-7);
    }
}

TEST(QuadratureProperty, NonRegularNotReproduced) {
    const QDbl q0(0.0, 0.1, 0.0, 0.0);
    const QPolynomial f = QPolynomial::identity().conj();
    EXPECT_GT(max_abs(laurent_b(f, QPolynomial(QRat::one()), sphere_rule(q0, 0.5, 5))), 1e-3);
}
