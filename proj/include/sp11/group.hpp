#pragma once

#include <cmath>

#include "sp11/matrix.hpp"
#include "sp11/quaternion.hpp"

namespace sp11 {

// γ(a, b, c, d) = [[a, b], [c, d]] with quaternion entries.
template <class S>
struct QMatrix2 {
    Quaternion<S> a, b, c, d;

    static QMatrix2 identity() { return {Quaternion<S>::one(), {}, {}, Quaternion<S>::one()}; }
    static QMatrix2 diag(const Quaternion<S>& u, const Quaternion<S>& v) { return {u, {}, {}, v}; }

    friend QMatrix2 operator*(const QMatrix2& g, const QMatrix2& h) {
        return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
    }
    friend QMatrix2 operator+(const QMatrix2& g, const QMatrix2& h) {
        return {g.a + h.a, g.b + h.b, g.c + h.c, g.d + h.d};
    }
    friend QMatrix2 operator-(const QMatrix2& g, const QMatrix2& h) {
        return {g.a - h.a, g.b - h.b, g.c - h.c, g.d - h.d};
    }
    friend QMatrix2 operator*(const S& s, const QMatrix2& g) { return {s * g.a, s * g.b, s * g.c, s * g.d}; }
    friend bool operator==(const QMatrix2& g, const QMatrix2& h) {
        return g.a == h.a && g.b == h.b && g.c == h.c && g.d == h.d;
    }
};

using QMatRat = QMatrix2<Rational>;
using QMatDbl = QMatrix2<double>;

template <class S>
double max_abs(const QMatrix2<S>& g) {
    return std::max({max_abs(g.a), max_abs(g.b), max_abs(g.c), max_abs(g.d)});
}

template <class S>
QMatrix2<double> to_double(const QMatrix2<S>& g) {
    return {to_double(g.a), to_double(g.b), to_double(g.c), to_double(g.d)};
}

// Conjugate transpose in M₂(H).
template <class S>
QMatrix2<S> qadjoint(const QMatrix2<S>& g) {
    return {g.a.conj(), g.c.conj(), g.b.conj(), g.d.conj()};
}

// For g ∈ Sp(1,1) the inverse is diag(1,-1) g* diag(1,-1) = γ(ā, -c̄, -b̄, d̄).
template <class S>
QMatrix2<S> sp11_inverse(const QMatrix2<S>& g) {
    return {g.a.conj(), -g.c.conj(), -g.b.conj(), g.d.conj()};
}

template <class S>
QMatrix2<S> sp11_defect(const QMatrix2<S>& g) {
    return g * sp11_inverse(g) - QMatrix2<S>::identity();
}

// Max over the 16 real coordinates of γ(a,b,c,d)·γ(ā,-c̄,-b̄,d̄) - I.
template <class S>
double is_sp11(const QMatrix2<S>& g) {
    return max_abs(sp11_defect(g));
}

// Checks g* diag(1,-1) g = diag(1,-1), the other-sided form of membership.
template <class S>
QMatrix2<S> unitary_defect(const QMatrix2<S>& g) {
    const QMatrix2<S> h = QMatrix2<S>::diag(Quaternion<S>::one(), -Quaternion<S>::one());
    return qadjoint(g) * h * g - h;
}

template <class S>
struct BallPoint {
    Quaternion<S> q;

    BallPoint() = default;
    explicit BallPoint(Quaternion<S> p) : q(std::move(p)) {}
    bool inside() const { return q.norm() < S(1); }
};

template <class S>
Quaternion<S> mobius_denominator(const QMatrix2<S>& g, const Quaternion<S>& q) {
    return g.c * q + g.d;
}

template <class S>
Quaternion<S> mobius_act(const QMatrix2<S>& g, const Quaternion<S>& q) {
    const Quaternion<S> den = mobius_denominator(g, q);
    if (is_zero(den.norm())) throw SingularDenominator("N(cq+d) = 0");
    return (g.a * q + g.b) * den.inverse();
}

template <class S>
BallPoint<S> mobius_act(const QMatrix2<S>& g, const BallPoint<S>& p) {
    return BallPoint<S>(mobius_act(g, p.q));
}

// (1 - N(g·q)) - (1 - N q)/N(cq+d); zero for g ∈ Sp(1,1).
template <class S>
S one_minus_norm_factor(const QMatrix2<S>& g, const Quaternion<S>& q) {
    const Quaternion<S> gq = mobius_act(g, q);
    const S lhs = S(1) - gq.norm();
    const S rhs = (S(1) - q.norm()) / mobius_denominator(g, q).norm();
    return S(lhs - rhs);
}

// A matrix divided by the square root of a scalar, kept as the pair
// (matrix, scalar) so products stay rational.
template <class S>
struct ScaledQMatrix {
    QMatrix2<S> m;
    S scale_sq;

    friend ScaledQMatrix operator*(const ScaledQMatrix& g, const ScaledQMatrix& h) {
        return {g.m * h.m, S(g.scale_sq * h.scale_sq)};
    }
    QMatrix2<double> value() const {
        return (1.0 / std::sqrt(to_double(scale_sq))) * to_double(m);
    }
};

// True when g.m/√s equals the identity: requires g.m = r·I with r² = s, r > 0.
template <class S>
bool is_scaled_identity(const ScaledQMatrix<S>& g) {
    const auto& m = g.m;
    if (!m.b.is_zero_q() || !m.c.is_zero_q() || m.a != m.d) return false;
    if (!is_zero(m.a.x) || !is_zero(m.a.y) || !is_zero(m.a.z)) return false;
    return m.a.t > S(0) && S(m.a.t * m.a.t) == g.scale_sq;
}

// Membership of g.m/√s in Sp(1,1): g.m γ(ā,-c̄,-b̄,d̄) = s·I.
template <class S>
QMatrix2<S> sp11_defect(const ScaledQMatrix<S>& g) {
    return g.m * sp11_inverse(g.m) - g.scale_sq * QMatrix2<S>::identity();
}

// σ(q) = (1 - N q)^{-1/2} γ(1, q, q̄, 1).
template <class S>
ScaledQMatrix<S> sigma(const Quaternion<S>& q) {
    const S s = S(1) - q.norm();
    if (!(s > S(0))) throw DomainError("sigma requires N q < 1");
    return {{Quaternion<S>::one(), q, q.conj(), Quaternion<S>::one()}, s};
}

inline QMatDbl sigma_value(const QDbl& q) { return sigma(q).value(); }

// ȷ(γ, q) = diag(u_left, u_right) with scale |cq+d|.
struct KFactor {
    QDbl u_left, u_right;
    double scale;
};

inline KFactor j_factor(const QMatDbl& g, const QDbl& q) {
    const QDbl den = mobius_denominator(g, q);
    const double n = den.norm();
    if (n == 0.0) throw SingularDenominator("N(cq+d) = 0");
    const double s = std::sqrt(n);
    return {(g.a + g.b * q.conj()) / s, den / s, s};
}

inline QMatDbl as_matrix(const KFactor& k) { return QMatDbl::diag(k.u_left, k.u_right); }

// γ(a,b,c,d)† = γ(d,c,b,a).
template <class S>
QMatrix2<S> dagger(const QMatrix2<S>& g) {
    return {g.d, g.c, g.b, g.a};
}

}  // namespace sp11
