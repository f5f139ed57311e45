#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sp11/random.hpp"
#include "sp11/rep.hpp"
#include "sp11/samples.hpp"

using namespace sp11;

namespace {

// Binary icosahedral group: 120 unit quaternions whose averages agree with the
// Haar average on polynomials of degree at most 11.
std::vector<QDbl> binary_icosahedral() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<QDbl> g{QDbl::one()};
    const std::vector<QDbl> gens{QDbl(0.5, 0.5, 0.5, 0.5), QDbl(phi / 2, 0.5 / phi, 0.5, 0.0)};
    for (std::size_t k = 0; k < g.size(); ++k)
        for (const auto& s : gens) {
            const QDbl p = g[k] * s;
            bool seen = false;
            for (const auto& h : g) seen = seen || max_abs(h - p) < 1e-9;
            if (!seen) g.push_back(p);
        }
    return g;
}

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST(Rep, R1IsIdentityMap) {
    const Matrix2<GaussRational> g{{{GaussRational(1, 2), GaussRational(3)}, {GaussRational(0, -1), GaussRational(5)}}};
    const auto r = rn_matrix(g, 1);
    EXPECT_EQ(r(0, 0), g[0][0]);
    EXPECT_EQ(r(0, 1), g[0][1]);
    EXPECT_EQ(r(1, 0), g[1][0]);
    EXPECT_EQ(r(1, 1), g[1][1]);
}

TEST(Rep, R2Diagonal) {
    const Matrix2<GaussRational> g{{{GaussRational(2), GaussRational(0)}, {GaussRational(0), GaussRational(3)}}};
    const auto r = rn_matrix(g, 2);
    Matrix<GaussRational> expected(3, 3);
    expected(0, 0) = GaussRational(4);
    expected(1, 1) = GaussRational(6);
    expected(2, 2) = GaussRational(9);
    EXPECT_EQ(r, expected);
    EXPECT_EQ(rn_matrix(g, 0), Matrix<GaussRational>::identity(1));
}

TEST(Rep, JnBinomialOracle) {
    for (int n = 0; n <= 6; ++n) {
        const auto j = jn_solve(n);
        Matrix<GaussRational> expected(std::size_t(n + 1), std::size_t(n + 1));
        for (int i = 0; i <= n; ++i) expected(std::size_t(i), std::size_t(i)) = GaussRational(binomial(n, i));
        EXPECT_EQ(j, expected) << "n = " << n;
    }
}

TEST(Rep, JnMatchesIcosahedralAverage) {
    const auto group = binary_icosahedral();
    ASSERT_EQ(group.size(), 120u);
    for (int n = 1; n <= 5; ++n) {
        const std::size_t m = std::size_t(n + 1);
        Matrix<Complex> avg(m, m);
        for (const auto& u : group) {
            const auto r = rn_matrix(u, n);
            avg = avg + r.transpose() * r.conj();
        }
        const Complex scale = avg(0, 0);
        const auto j = to_complex_matrix(jn_solve(n));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) EXPECT_NEAR(std::abs(avg(a, b) / scale - j(a, b)), 0.0, 1e-12);
    }
}

TEST(Rep, MuOfJIdentity) {
    // jI = ĵ·I splits as g0 = 0, g1 = I, so μ has identity off-diagonal blocks up to (-1)^n.
    for (int n = 1; n <= 3; ++n) {
        const auto mu = mu_matrix(QMatRat::diag(QRat::j(), QRat::j()), n);
        const std::size_t m = std::size_t(n + 1);
        const GaussRational sign(n % 2 ? -1 : 1);
        for (std::size_t a = 0; a < m; ++a) {
            EXPECT_EQ(mu(a, m + a), GaussRational(1));
            EXPECT_EQ(mu(m + a, a), sign);
            EXPECT_EQ(mu(a, a), GaussRational(0));
        }
    }
}

TEST(RepProperty, RnHomomorphismExact) {
    Rng rng(41);
    for (int n = 0; n <= 4; ++n)
        for (int s = 0; s < 10; ++s) {
            const auto g = random_gauss_matrix(rng), h = random_gauss_matrix(rng);
            EXPECT_EQ(rn_matrix(g * h, n), rn_matrix(g, n) * rn_matrix(h, n));
        }
}

TEST(RepProperty, JnInvarianceFloat) {
    Rng rng(42);
    for (int n = 1; n <= 4; ++n) {
        const auto j = jn_solve(n);
        for (int s = 0; s < 50; ++s) EXPECT_LT(max_abs(jn_defect(j, rng.unit_quaternion(), n)), 1e-10);
    }
}

TEST(RepProperty, MuHomomorphismDegreeOne) {
    Rng rng(43);
    for (int s = 0; s < 50; ++s) {
        const QMatDbl g = random_gl2h(rng), h = random_gl2h(rng);
        EXPECT_LT(max_abs(mu_matrix(g * h, 1) - mu_matrix(g, 1) * mu_matrix(h, 1)), 1e-10);
    }
}

TEST(RepProperty, ZRelationComplexEntries) {
    Rng rng(44);
    for (int n = 1; n <= 4; ++n)
        for (int s = 0; s < 20; ++s) {
            const QMatDbl g = random_sp11_complex(rng, s % 2 == 1);
            EXPECT_LT(max_abs(z_relation_defect(g, rng.ball_point_double(), n)), 1e-9);
        }
}
