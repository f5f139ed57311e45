#include "sp11/samples.hpp"

#include <cmath>
#include <numbers>

namespace sp11 {

QPolynomial random_polynomial(Rng& rng, int deg, bool complex_valued) {
    QPolynomial p;
    for (int a = 0; a <= deg; ++a)
        for (int b = 0; a + b <= deg; ++b)
            for (int c = 0; a + b + c <= deg; ++c)
                for (int d = 0; a + b + c + d <= deg; ++d) {
                    QRat q = rng.rational_quaternion(4, Rational(2));
                    if (complex_valued) q.y = q.z = 0;
                    p.add_term({std::uint8_t(a), std::uint8_t(b), std::uint8_t(c), std::uint8_t(d)}, q);
                }
    return p;
}

QPolynomial random_regular(Rng& rng, int n) {
    QPolynomial p;
    for (int l = 0; l <= n; ++l)
        for (int k = 0; k <= l; ++k) p += q_kl(n, k, l) * rng.rational_quaternion(4, Rational(2));
    return p;
}

VnFunction random_vn_function(Rng& rng, int n, int deg) {
    VnFunction f;
    for (int i = 0; i <= n; ++i) f.push_back(random_polynomial(rng, deg, true));
    return f;
}

QMatDbl random_sp11(Rng& rng) {
    auto k = [&] { return QMatDbl::diag(rng.unit_quaternion(), rng.unit_quaternion()); };
    return k() * sigma_value(rng.ball_point_double(0.6)) * k() * sigma_value(rng.ball_point_double(0.6));
}

QMatDbl random_gl2h(Rng& rng) {
    return {rng.gaussian_quaternion(), rng.gaussian_quaternion(), rng.gaussian_quaternion(),
            rng.gaussian_quaternion()};
}

QMatDbl random_complex_or_j_matrix(Rng& rng, bool j_part) {
    auto entry = [&] {
        const double a = rng.normal(), b = rng.normal();
        return j_part ? QDbl(0.0, 0.0, a, b) : QDbl(a, b, 0.0, 0.0);
    };
    return {entry(), entry(), entry(), entry()};
}

QMatDbl random_sp11_complex(Rng& rng, bool j_part) {
    auto phase = [&] {
        const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
        return QDbl(std::cos(a), std::sin(a), 0.0, 0.0);
    };
    auto point = [&] {
        for (;;) {
            const QDbl p(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6), 0.0, 0.0);
            if (p.norm() < 0.36) return p;
        }
    };
    auto k = [&] { return QMatDbl::diag(phase(), phase()); };
    QMatDbl g = k() * sigma_value(point()) * k() * sigma_value(point());
    if (j_part) g = QMatDbl::diag(QDbl::j(), QDbl::j()) * g;
    return g;
}

QRat rational_unit(Rng& rng) {
    const QRat v{Rational(0), rng.rational(8), rng.rational(8), rng.rational(8)};
    return (QRat::one() + v) * (QRat::one() - v).inverse();
}

GaussRational random_gauss(Rng& rng) { return rng.gauss_rational(8); }

Matrix2<GaussRational> random_gauss_matrix(Rng& rng) {
    return {{{random_gauss(rng), random_gauss(rng)}, {random_gauss(rng), random_gauss(rng)}}};
}

const std::vector<IntegralGroupElement>& gz_sample_pool() {
    static const std::vector<IntegralGroupElement> pool = search_gz(4);
    return pool;
}

}  // namespace sp11
