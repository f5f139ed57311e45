#pragma once

#include <array>
#include <ostream>

#include "sp11/errors.hpp"
#include "sp11/scalar.hpp"

namespace sp11 {

// q = t + x î + y ĵ + z k̂. With a complex scalar type this is H_C, and conj()
// leaves the scalars alone.
template <class S>
struct Quaternion {
    S t{}, x{}, y{}, z{};

    Quaternion() = default;
    Quaternion(S t_) : t(std::move(t_)), x(0), y(0), z(0) {}
    Quaternion(S t_, S x_, S y_, S z_)
        : t(std::move(t_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    static Quaternion one() { return Quaternion(S(1)); }
    static Quaternion i() { return {S(0), S(1), S(0), S(0)}; }
    static Quaternion j() { return {S(0), S(0), S(1), S(0)}; }
    static Quaternion k() { return {S(0), S(0), S(0), S(1)}; }
    static Quaternion basis(int e) {
        Quaternion q{S(0), S(0), S(0), S(0)};
        q[e] = S(1);
        return q;
    }

    S& operator[](int e) { return e == 0 ? t : e == 1 ? x : e == 2 ? y : z; }
    const S& operator[](int e) const { return e == 0 ? t : e == 1 ? x : e == 2 ? y : z; }

    Quaternion conj() const { return {t, S(-x), S(-y), S(-z)}; }
    S norm() const { return S(t * t + x * x + y * y + z * z); }
    S trace() const { return S(t + t); }

    Quaternion inverse(double eps = 0.0) const {
        S n = norm();
        if (is_zero(n) || (eps > 0.0 && magnitude(n) < eps))
            throw ZeroDivisor("quaternion has zero norm");
        return {S(t / n), S(-x / n), S(-y / n), S(-z / n)};
    }

    bool is_zero_q() const { return is_zero(t) && is_zero(x) && is_zero(y) && is_zero(z); }

    Quaternion& operator+=(const Quaternion& o) { t += o.t; x += o.x; y += o.y; z += o.z; return *this; }
    Quaternion& operator-=(const Quaternion& o) { t -= o.t; x -= o.x; y -= o.y; z -= o.z; return *this; }
    Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }
    Quaternion& operator*=(const S& s) { t *= s; x *= s; y *= s; z *= s; return *this; }

    friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend Quaternion operator-(const Quaternion& a) { return {S(-a.t), S(-a.x), S(-a.y), S(-a.z)}; }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {S(a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z),
                S(a.t * b.x + a.x * b.t + a.y * b.z - a.z * b.y),
                S(a.t * b.y - a.x * b.z + a.y * b.t + a.z * b.x),
                S(a.t * b.z + a.x * b.y - a.y * b.x + a.z * b.t)};
    }
    friend Quaternion operator*(const S& s, Quaternion q) { return q *= s; }
    friend Quaternion operator*(Quaternion q, const S& s) { return q *= s; }
    friend Quaternion operator/(const Quaternion& q, const S& s) {
        return {S(q.t / s), S(q.x / s), S(q.y / s), S(q.z / s)};
    }
    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.t == b.t && a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
        return os << '[' << q.t << ',' << q.x << ',' << q.y << ',' << q.z << ']';
    }
};

using QRat = Quaternion<Rational>;
using QDbl = Quaternion<double>;
using CQuaternion = Quaternion<Complex>;
using CQRat = Quaternion<GaussRational>;

// Largest coordinate magnitude; the float residual measure used throughout.
template <class S>
double max_abs(const Quaternion<S>& q) {
    double m = 0.0;
    for (int e = 0; e < 4; ++e) m = std::max(m, magnitude(q[e]));
    return m;
}

template <class S>
Quaternion<double> to_double(const Quaternion<S>& q) {
    return {to_double(q.t), to_double(q.x), to_double(q.y), to_double(q.z)};
}

template <class S>
auto conj_norm_trace(const Quaternion<S>& q) {
    struct Result { Quaternion<S> conj; S norm; S trace; };
    return Result{q.conj(), q.norm(), q.trace()};
}

// q' = q⁻¹ / N q.
template <class S>
Quaternion<S> prime(const Quaternion<S>& q, double eps = 0.0) {
    Quaternion<S> inv = q.inverse(eps);
    S n = q.norm();
    return inv / n;
}

template <class C>
using Matrix2 = std::array<std::array<C, 2>, 2>;

template <class C>
Matrix2<C> operator*(const Matrix2<C>& a, const Matrix2<C>& b) {
    Matrix2<C> r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

// ι(t + xî + yĵ + zk̂) = [[t+ix, y+iz], [-y+iz, t-ix]]; extended C-linearly on H_C.
template <class S>
Matrix2<complex_of<S>> iota(const Quaternion<S>& q) {
    using C = complex_of<S>;
    const C i = imag_unit<C>();
    C t(q.t), x(q.x), y(q.y), z(q.z);
    return {{{t + i * x, y + i * z}, {-y + i * z, t - i * x}}};
}

// Inverse of ι on M₂(C) for real scalars: a matrix [[α, β], [-β̄, ᾱ]] gives back q.
template <class C>
auto iota_inverse(const Matrix2<C>& m) {
    using R = typename scalar_traits<C>::real_type;
    return Quaternion<R>(R(real_part(m[0][0])), R(imag_part(m[0][0])), R(real_part(m[0][1])),
                         R(imag_part(m[0][1])));
}

// Complex decomposition q = z + ĵ w with z, w in span{1, î}.
template <class S>
std::pair<complex_of<S>, complex_of<S>> split_zjw(const Quaternion<S>& q) {
    using C = complex_of<S>;
    // ĵ(y + s î) = y ĵ - s k̂, so w = y - z î.
    return {make_complex<C>(q.t, q.x), make_complex<C>(q.y, S(-q.z))};
}

template <class C>
auto join_zjw(const C& zc, const C& wc) {
    using R = typename scalar_traits<C>::real_type;
    return Quaternion<R>(R(real_part(zc)), R(imag_part(zc)), R(real_part(wc)), R(-imag_part(wc)));
}

}  // namespace sp11
