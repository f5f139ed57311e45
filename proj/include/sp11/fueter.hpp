#pragma once

#include <vector>

#include "sp11/qpoly.hpp"

namespace sp11 {

// ∂̄_l f = f_t + î f_x + ĵ f_y + k̂ f_z; ∂̄_r puts the units on the right;
// ∂_l, ∂_r flip the signs of the imaginary terms.
enum class FueterOp { dl, dl_bar, dr, dr_bar };
enum class Involution { bar, dag, star };

QPolynomial fueter_apply(const QPolynomial& f, FueterOp op);
QPolynomial involution(const QPolynomial& f, Involution which);
QPolynomial laplacian(const QPolynomial& f);

// Complex coordinates z = t + îx and w = y + îz, so that q = z + wĵ.
QPolynomial z_coord();
QPolynomial zbar_coord();
QPolynomial w_coord();
QPolynomial wbar_coord();

// Wirtinger derivatives with respect to z, z̄, w, w̄ for complex-valued f.
QPolynomial d_z(const QPolynomial& f);
QPolynomial d_zbar(const QPolynomial& f);
QPolynomial d_w(const QPolynomial& f);
QPolynomial d_wbar(const QPolynomial& f);

// z^{[m]} = z^m / m!, zero for m < 0.
QPolynomial divided_power(const QPolynomial& p, int m);

// P^n_{k,l} = Σ_r (-1)^r z^{[n-k-l+r]} z̄^{[r]} w^{[k-r]} w̄^{[l-r]}.
QPolynomial p_kl(int n, int k, int l);
// Q^n_{k,l} = P^n_{k,l} - ĵ P^n_{k-1,l}.
QPolynomial q_kl(int n, int k, int l);

// Coefficients of X^{n-i} Y^i, as quaternion-valued polynomials in q.
using VnFunction = std::vector<QPolynomial>;

VnFunction vn_diff(const VnFunction& f, bool by_x);
// f_X - ĵ f_Y.
std::vector<QPolynomial> x_minus_j_y(const VnFunction& f);

struct MinimalKType {
    VnFunction g;               // g_k^n
    std::vector<QPolynomial> h; // coordinates of h_k^n = (∂_X - ĵ∂_Y) g_k^n
};
MinimalKType minimal_ktype(int n, int k);

// D(f) = π⁻(df), computed from the tensor df = (1/24) Σ E_i ⊗ ∂f/∂x_i and from
// (1/24) ∂̄(f_X - ĵf_Y); throws DiagramMismatch when they differ.
std::vector<QPolynomial> dirac_lz_tensor_path(const VnFunction& f);
std::vector<QPolynomial> dirac_lz_operator_path(const VnFunction& f);
std::vector<QPolynomial> dirac_lz(const VnFunction& f);

// (∂_Y - ĵ∂_X) Σ h_i X^{n-1-i} Y^i, coefficients of X^{n-2-i} Y^i.
std::vector<QPolynomial> hwt_expression(const std::vector<QPolynomial>& h);

// Polynomial curves s ↦ Σ c_k s^k in H.
struct QCurve {
    std::vector<QRat> c;

    QRat operator()(const Rational& s) const;
    QCurve derivative() const;
    friend QCurve operator*(const QCurve& a, const QCurve& b);
    std::vector<Rational> component(int e) const;
};

// d/ds (f∘g)(s0) computed by composing then differentiating.
QRat composed_derivative(const QPolynomial& f, const QCurve& g, const Rational& s0);
// (Df∘g)(s0)·[g_s(s0)] with Df = (∂_t f, ∂_x f, ∂_y f, ∂_z f).
QRat curve_derivative(const QPolynomial& f, const QCurve& g, const Rational& s0);
// d/ds g(s)⁻¹ at s0 by forward-mode differentiation.
QRat inverse_derivative_dual(const QCurve& g, const Rational& s0);

}  // namespace sp11
