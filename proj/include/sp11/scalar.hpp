#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <ostream>

namespace sp11 {

using Rational = mpq_class;

// Complex numbers over an exact field. std::complex is only specified for
// floating point types, so the Gaussian rationals get their own type.
template <class T>
struct Gaussian {
    T re{}, im{};

    Gaussian() = default;
    Gaussian(T r) : re(std::move(r)) {}
    Gaussian(T r, T i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(int r) : re(r) {}

    Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
    Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator-(const Gaussian& a) { return Gaussian(T(-a.re), T(-a.im)); }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return Gaussian(T(a.re * b.re - a.im * b.im), T(a.re * b.im + a.im * b.re));
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
        T n = b.re * b.re + b.im * b.im;
        return Gaussian(T((a.re * b.re + a.im * b.im) / n), T((a.im * b.re - a.re * b.im) / n));
    }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Gaussian& g) {
        return os << '(' << g.re << ',' << g.im << ')';
    }
};

using GaussRational = Gaussian<Rational>;
using Complex = std::complex<double>;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr bool complex = false;
    using real_type = Rational;
    using complex_type = GaussRational;
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr bool complex = false;
    using real_type = double;
    using complex_type = Complex;
};

template <>
struct scalar_traits<GaussRational> {
    static constexpr bool exact = true;
    static constexpr bool complex = true;
    using real_type = Rational;
    using complex_type = GaussRational;
};

template <>
struct scalar_traits<Complex> {
    static constexpr bool exact = false;
    static constexpr bool complex = true;
    using real_type = double;
    using complex_type = Complex;
};

template <class S>
using complex_of = typename scalar_traits<S>::complex_type;

template <class S>
inline constexpr bool is_exact_v = scalar_traits<S>::exact;

// p/q in lowest terms; mpq_class(p, q) alone does not reduce.
inline Rational make_rational(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double r) { return r; }

inline double magnitude(const Rational& r) { return std::fabs(r.get_d()); }
inline double magnitude(double r) { return std::fabs(r); }
inline double magnitude(const Complex& c) { return std::abs(c); }
inline double magnitude(const GaussRational& g) { return std::hypot(g.re.get_d(), g.im.get_d()); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(double r) { return r == 0.0; }
inline bool is_zero(const Complex& c) { return c == Complex(0.0, 0.0); }
inline bool is_zero(const GaussRational& g) { return sgn(g.re) == 0 && sgn(g.im) == 0; }

// Complex conjugation of scalars; identity on real types.
inline Rational cconj(const Rational& r) { return r; }
inline double cconj(double r) { return r; }
inline Complex cconj(const Complex& c) { return std::conj(c); }
inline GaussRational cconj(const GaussRational& g) { return GaussRational(g.re, Rational(-g.im)); }

template <class C>
C imag_unit() {
    if constexpr (std::is_same_v<C, Complex>) return Complex(0.0, 1.0);
    else return C(typename scalar_traits<C>::real_type(0), typename scalar_traits<C>::real_type(1));
}

template <class C, class R>
C make_complex(const R& re, const R& im) {
    using Real = typename scalar_traits<C>::real_type;
    return C(Real(re), Real(im));
}

template <class C>
auto real_part(const C& c) {
    if constexpr (std::is_same_v<C, Complex>) return c.real();
    else if constexpr (scalar_traits<C>::complex) return c.re;
    else return c;
}

template <class C>
auto imag_part(const C& c) {
    if constexpr (std::is_same_v<C, Complex>) return c.imag();
    else if constexpr (scalar_traits<C>::complex) return c.im;
    else return typename scalar_traits<C>::real_type(0);
}

inline Complex to_complex(const GaussRational& g) { return {g.re.get_d(), g.im.get_d()}; }
inline Complex to_complex(const Complex& c) { return c; }

inline constexpr double kDefaultTol = 1e-10;

}  // namespace sp11
