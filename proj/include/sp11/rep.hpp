#pragma once

#include <string>
#include <vector>

#include "sp11/group.hpp"
#include "sp11/matrix.hpp"
#include "sp11/quaternion.hpp"

namespace sp11 {

enum class BasisTag { monomial_xfirst, stacked };

inline std::string to_string(BasisTag b) { return b == BasisTag::monomial_xfirst ? "monomial_Xfirst" : "stacked"; }

template <class C>
struct RepMatrix {
    Matrix<C> m;
    BasisTag basis = BasisTag::monomial_xfirst;
};

// Homogeneous f = Σ c_i X^{n-i} Y^i.
template <class C>
struct VPolynomial {
    std::vector<C> c;

    VPolynomial() = default;
    explicit VPolynomial(std::vector<C> coeffs) : c(std::move(coeffs)) {}
    static VPolynomial zero(int n) { return VPolynomial(std::vector<C>(std::size_t(n + 1), C(0))); }
    static VPolynomial monomial(int n, int i) {
        auto p = zero(n);
        p.c[std::size_t(i)] = C(1);
        return p;
    }
    int degree() const { return int(c.size()) - 1; }

    friend bool operator==(const VPolynomial& a, const VPolynomial& b) { return a.c == b.c; }
    friend VPolynomial operator+(VPolynomial a, const VPolynomial& b) {
        for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
        return a;
    }
    friend VPolynomial operator-(VPolynomial a, const VPolynomial& b) {
        for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] -= b.c[i];
        return a;
    }
    friend VPolynomial operator*(const VPolynomial& a, const VPolynomial& b) {
        VPolynomial r = zero(a.degree() + b.degree());
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        return r;
    }
};

enum class Var { X, Y };

template <class C>
VPolynomial<C> poly_diff(const VPolynomial<C>& f, Var v) {
    const int n = f.degree();
    if (n <= 0) return VPolynomial<C>::zero(0);
    auto r = VPolynomial<C>::zero(n - 1);
    for (int i = 0; i < n; ++i) {
        // X^{n-1-i} Y^i comes from X^{n-i}Y^i under ∂_X and X^{n-1-i}Y^{i+1} under ∂_Y.
        if (v == Var::X) r.c[std::size_t(i)] = C(n - i) * f.c[std::size_t(i)];
        else r.c[std::size_t(i)] = C(i + 1) * f.c[std::size_t(i + 1)];
    }
    return r;
}

template <class C>
VPolynomial<C> vpow(const VPolynomial<C>& p, int k) {
    VPolynomial<C> r = VPolynomial<C>::monomial(0, 0);
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

// Row i lists the coefficients of (aX+bY)^{n-i}(cX+dY)^i.
template <class C>
Matrix<C> rn_matrix(const Matrix2<C>& g, int n) {
    const VPolynomial<C> l1(std::vector<C>{g[0][0], g[0][1]});
    const VPolynomial<C> l2(std::vector<C>{g[1][0], g[1][1]});
    std::vector<VPolynomial<C>> p1{VPolynomial<C>::monomial(0, 0)}, p2{VPolynomial<C>::monomial(0, 0)};
    for (int k = 1; k <= n; ++k) {
        p1.push_back(p1.back() * l1);
        p2.push_back(p2.back() * l2);
    }
    Matrix<C> r(std::size_t(n + 1), std::size_t(n + 1));
    for (int i = 0; i <= n; ++i) {
        const auto row = p1[std::size_t(n - i)] * p2[std::size_t(i)];
        for (int j = 0; j <= n; ++j) r(std::size_t(i), std::size_t(j)) = row.c[std::size_t(j)];
    }
    return r;
}

template <class S>
Matrix<complex_of<S>> rn_matrix(const Quaternion<S>& u, int n) {
    return rn_matrix(iota(u), n);
}

template <class C>
Matrix2<C> transpose2(const Matrix2<C>& g) {
    return {{{g[0][0], g[1][0]}, {g[0][1], g[1][1]}}};
}

template <class C>
Matrix2<C> conj2(const Matrix2<C>& g) {
    return {{{cconj(g[0][0]), cconj(g[0][1])}, {cconj(g[1][0]), cconj(g[1][1])}}};
}

// Left action of GL₂ on coefficient columns of V_n, extending g on V₁:
// X ↦ g₁₁X + g₂₁Y, Y ↦ g₁₂X + g₂₂Y.
template <class C>
Matrix<C> rho_matrix(const Matrix2<C>& g, int n) {
    return rn_matrix(transpose2(g), n).transpose();
}

// P⁺((a∂_X + b∂_Y) ⊗ f) = (bX - aY) f.
template <class C>
VPolynomial<C> p_plus(const C& a, const C& b, const VPolynomial<C>& f) {
    return VPolynomial<C>(std::vector<C>{b, C(-a)}) * f;
}

// P⁻((a∂_X + b∂_Y) ⊗ f) = a f_X + b f_Y.
template <class C>
VPolynomial<C> p_minus(const C& a, const C& b, const VPolynomial<C>& f) {
    if (f.degree() < 1) throw DomainError("P- needs deg f >= 1");
    auto fx = poly_diff(f, Var::X), fy = poly_diff(f, Var::Y);
    for (std::size_t i = 0; i < fx.c.size(); ++i) fx.c[i] = a * fx.c[i] + b * fy.c[i];
    return fx;
}

template <class C>
VPolynomial<C> p_plus_minus(const C& a, const C& b, const VPolynomial<C>& f, int sign) {
    return sign > 0 ? p_plus(a, b, f) : p_minus(a, b, f);
}

// V₁ → H: aX + bY ↦ a - ĵb.
template <class C>
auto v1_to_h(const C& a, const C& b) {
    return join_zjw(a, C(-b));
}

// V₁* → V₁: aX* + bY* ↦ bX - aY, as coefficient pairs.
template <class C>
std::array<C, 2> v1dual_to_v1(const C& a, const C& b) {
    return {b, C(-a)};
}

// Hermitian J with ᵗR_n(u) J conj(R_n(u)) = J on H¹, normalised to J(0,0) = 1.
Matrix<GaussRational> jn_solve(int n);

// ᵗR J R̄ - J for a given unit quaternion.
template <class S>
Matrix<Complex> jn_defect(const Matrix<GaussRational>& j, const Quaternion<S>& u, int n) {
    const auto r = to_complex_matrix(rn_matrix(to_double(u), n));
    const auto jc = to_complex_matrix(j);
    return r.transpose() * jc * r.conj() - jc;
}

// Entry-wise split g = g₀ + ĵ g₁ with g₀, g₁ ∈ M₂(C).
template <class S>
std::pair<Matrix2<complex_of<S>>, Matrix2<complex_of<S>>> split_matrix(const QMatrix2<S>& g) {
    auto [a0, a1] = split_zjw(g.a);
    auto [b0, b1] = split_zjw(g.b);
    auto [c0, c1] = split_zjw(g.c);
    auto [d0, d1] = split_zjw(g.d);
    return {{{{a0, b0}, {c0, d0}}}, {{{a1, b1}, {c1, d1}}}};
}

// μ(g₀ + ĵg₁) = [[R_n(g₀), R_n(ḡ₁)], [(-1)^n R_n(g₁), R_n(ḡ₀)]], the block matrix
// sending the stacked W(x, y) to W(ax+by, cx+dy) whenever g has entries all in C
// or all in ĵC.
template <class S>
Matrix<complex_of<S>> mu_matrix(const QMatrix2<S>& g, int n) {
    using C = complex_of<S>;
    const auto [g0, g1] = split_matrix(g);
    const std::size_t m = std::size_t(n + 1);
    Matrix<C> r(2 * m, 2 * m);
    r.set_block(0, 0, rn_matrix(g0, n));
    r.set_block(0, m, rn_matrix(conj2(g1), n));
    Matrix<C> low = rn_matrix(g1, n);
    if (n % 2 == 1) low = C(-1) * low;
    r.set_block(m, 0, low);
    r.set_block(m, m, rn_matrix(conj2(g0), n));
    return r;
}

// The block display with transposed blocks and no sign, kept for comparison.
template <class S>
Matrix<complex_of<S>> mu_matrix_transposed_display(const QMatrix2<S>& g, int n) {
    using C = complex_of<S>;
    const auto [g0, g1] = split_matrix(g);
    const std::size_t m = std::size_t(n + 1);
    Matrix<C> r(2 * m, 2 * m);
    r.set_block(0, 0, rn_matrix(g0, n).transpose());
    r.set_block(0, m, rn_matrix(conj2(g1), n).transpose());
    r.set_block(m, 0, rn_matrix(g1, n).transpose());
    r.set_block(m, m, rn_matrix(conj2(g0), n).transpose());
    return r;
}

// Stacked W(x, y) = [R_n(first rows of ι(x), ι(y)); R_n(second rows)].
template <class S>
Matrix<complex_of<S>> w_matrix(const Quaternion<S>& x, const Quaternion<S>& y, int n) {
    using C = complex_of<S>;
    const auto ix = iota(x), iy = iota(y);
    const Matrix2<C> top{{{ix[0][0], ix[0][1]}, {iy[0][0], iy[0][1]}}};
    const Matrix2<C> bot{{{ix[1][0], ix[1][1]}, {iy[1][0], iy[1][1]}}};
    const std::size_t m = std::size_t(n + 1);
    Matrix<C> r(2 * m, m);
    r.set_block(0, 0, rn_matrix(top, n));
    r.set_block(m, 0, rn_matrix(bot, n));
    return r;
}

template <class S>
Matrix<complex_of<S>> z_matrix(const Quaternion<S>& q, int n) {
    return w_matrix(q, Quaternion<S>::one(), n);
}

// Z(γq) R_n(cq+d) - μ(γ) Z(q).
template <class S>
Matrix<complex_of<S>> z_relation_defect(const QMatrix2<S>& g, const Quaternion<S>& q, int n) {
    const Quaternion<S> den = mobius_denominator(g, q);
    if (is_zero(den.norm())) throw SingularDenominator("N(cq+d) = 0");
    return z_matrix(mobius_act(g, q), n) * rn_matrix(den, n) - mu_matrix(g, n) * z_matrix(q, n);
}

// R_n(cq+d)* Z(γq)* - Z(q)* μ(γ)*.
template <class S>
Matrix<complex_of<S>> z_adjoint_defect(const QMatrix2<S>& g, const Quaternion<S>& q, int n) {
    const Quaternion<S> den = mobius_denominator(g, q);
    return rn_matrix(den, n).adjoint() * z_matrix(mobius_act(g, q), n).adjoint() -
           z_matrix(q, n).adjoint() * mu_matrix(g, n).adjoint();
}

// Automorphy factors: rho uses cq+d, lambda uses a+bq̄.
enum class Side { rho, lambda };

struct WeightFactor {
    double scale;       // |m|²
    QDbl inv;           // m⁻¹
    Matrix<Complex> rep;  // R_{n-1}(m⁻¹)
};

inline QDbl weight_quaternion(const QMatDbl& g, const QDbl& q, Side side) {
    return side == Side::rho ? mobius_denominator(g, q) : g.a + g.b * q.conj();
}

inline WeightFactor weight_cocycle(const QMatDbl& g, const QDbl& q, int n, Side side) {
    const QDbl m = weight_quaternion(g, q, side);
    const QDbl inv = m.inverse(1e-300);
    return {m.norm(), inv, rn_matrix(inv, n - 1)};
}

}  // namespace sp11
