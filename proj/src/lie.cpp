#include "sp11/lie.hpp"

namespace sp11 {

namespace {

using G = GaussRational;

QRat imag_q(const std::array<Rational, 3>& a) { return {Rational(0), a[0], a[1], a[2]}; }

G gi(long re, long im) { return G(Rational(re), Rational(im)); }

}  // namespace

ComplexLieVector complexify(const LieVector& v) {
    ComplexLieVector r;
    for (std::size_t i = 0; i < kLieDim; ++i) r.c[i] = G(v.c[i]);
    return r;
}

std::array<Rational, 3> su2_bracket(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
    const QRat p = imag_q(a), q = imag_q(b);
    const QRat r = p * q - q * p;
    return {r.x, r.y, r.z};
}

Matrix<Rational> su2_ad_matrix(const std::array<Rational, 3>& a) {
    Matrix<Rational> m(3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        std::array<Rational, 3> e{0, 0, 0};
        e[j] = 1;
        const auto col = su2_bracket(a, e);
        for (std::size_t i = 0; i < 3; ++i) m(i, j) = col[i];
    }
    return m;
}

Matrix<Rational> killing_matrix(Algebra alg) {
    if (alg == Algebra::su2) {
        std::array<Matrix<Rational>, 3> ad;
        for (std::size_t i = 0; i < 3; ++i) {
            std::array<Rational, 3> e{0, 0, 0};
            e[i] = 1;
            ad[i] = su2_ad_matrix(e);
        }
        Matrix<Rational> b(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                const auto p = ad[i] * ad[j];
                b(i, j) = p(0, 0) + p(1, 1) + p(2, 2);
            }
        return b;
    }
    std::vector<Matrix<Rational>> ad;
    for (std::size_t i = 0; i < kLieDim; ++i) ad.push_back(ad_matrix(basis_vector<Rational>(i)));
    Matrix<Rational> b(kLieDim, kLieDim);
    for (std::size_t i = 0; i < kLieDim; ++i)
        for (std::size_t j = 0; j < kLieDim; ++j) {
            const auto p = ad[i] * ad[j];
            Rational t = 0;
            for (std::size_t k = 0; k < kLieDim; ++k) t += p(k, k);
            b(i, j) = t;
        }
    return b;
}

bool is_compact_root(const RootLabel& mu) {
    return (std::abs(mu.r) == 2 && mu.s == 0) || (mu.r == 0 && std::abs(mu.s) == 2);
}

bool is_root(const RootLabel& mu) {
    return is_compact_root(mu) || (std::abs(mu.r) == 1 && std::abs(mu.s) == 1);
}

std::vector<RootLabel> roots() {
    return {{2, 0}, {-2, 0}, {0, 2}, {0, -2}, {1, -1}, {1, 1}, {-1, 1}, {-1, -1}};
}

RootVector root_vector(const RootLabel& mu) {
    if (!is_root(mu)) throw NotARoot("(" + std::to_string(mu.r) + "," + std::to_string(mu.s) + ") is not a root");
    ComplexLieVector v;
    for (auto& x : v.c) x = G(0);
    if (is_compact_root(mu)) {
        // (ĵ ∓ ik̂) in the top-left (α) or bottom-right (β) block.
        const int sign = (mu.r + mu.s) > 0 ? -1 : 1;
        const std::size_t off = mu.r != 0 ? 0 : 3;
        v.c[off + 1] = gi(1, 0);
        v.c[off + 2] = gi(0, sign);
        return {v, -24};
    }
    // Off-diagonal b; the lower-left entry is b̄ by construction.
    long pre;
    if (mu.r == 1 && mu.s == -1) {
        pre = -1;
        v.c[6] = gi(1, 0);
        v.c[7] = gi(0, -1);  // 1 - iî
    } else if (mu.r == -1 && mu.s == 1) {
        pre = 1;
        v.c[6] = gi(1, 0);
        v.c[7] = gi(0, 1);  // 1 + iî
    } else if (mu.r == 1 && mu.s == 1) {
        pre = -1;
        v.c[8] = gi(1, 0);
        v.c[9] = gi(0, -1);  // ĵ - ik̂
    } else {
        pre = 1;
        v.c[8] = gi(1, 0);
        v.c[9] = gi(0, 1);  // ĵ + ik̂
    }
    return {gi(pre, 0) * v, -48};
}

GaussRational root_value(const RootLabel& mu, const GaussRational& z, const GaussRational& w) {
    return gi(0, 1) * (G(Rational(mu.r)) * z + G(Rational(mu.s)) * w);
}

ComplexLieVector cartan_diag(const GaussRational& z, const GaussRational& w) {
    ComplexLieVector v;
    for (auto& x : v.c) x = G(0);
    v.c[0] = z;
    v.c[3] = w;
    return v;
}

ComplexLieVector cartan_element(const RootLabel& mu) {
    // H_α = (-1/12) diag(iî, 0), H_β = (-1/12) diag(0, iî).
    const G c(Rational(0), Rational(-1, 12));
    return cartan_diag(G(Rational(mu.r)) * c, G(Rational(mu.s)) * c);
}

std::optional<GaussRational> killing_root(const RootVector& e, const RootVector& f) {
    const G b = killing(e.v, f.v);
    if (e.radicand != f.radicand) {
        if (is_zero(b)) return G(0);
        return std::nullopt;
    }
    return b / G(Rational(e.radicand));
}

ComplexLieVector bracket_root(const RootVector& e, const RootVector& f) {
    if (e.radicand != f.radicand) throw DomainError("bracket of root vectors with different normalisations");
    return G(make_rational(1, e.radicand)) * bracket(e.v, f.v);
}

ComplexLieVector root_equation_defect(const RootLabel& mu, const GaussRational& z, const GaussRational& w) {
    const auto e = root_vector(mu);
    return bracket(cartan_diag(z, w), e.v) - root_value(mu, z, w) * e.v;
}

Sl2Triple sl2_triple_map() {
    const G half(Rational(1, 2));
    const G mhalf(Rational(-1, 2));
    const G z(0);
    return {CQRat(z, z, half, G(Rational(0), Rational(-1, 2))), CQRat(z, z, mhalf, G(Rational(0), Rational(-1, 2))),
            CQRat(z, G(Rational(0), Rational(-1)), z, z)};
}

}  // namespace sp11
