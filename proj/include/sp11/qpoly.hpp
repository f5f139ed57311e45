#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "sp11/quaternion.hpp"

namespace sp11 {

// Exponents of t, x, y, z.
using Exponent = std::array<std::uint8_t, 4>;

// Polynomial in the real variables t, x, y, z with quaternion coefficients.
// Products multiply coefficients in order (left factor's coefficient first).
class QPolynomial {
public:
    using Terms = std::map<Exponent, QRat>;

    QPolynomial() = default;
    QPolynomial(const QRat& c) { add_term({0, 0, 0, 0}, c); }

    static QPolynomial variable(int v);       // t, x, y or z as a real variable
    static QPolynomial identity();            // f(q) = q
    static QPolynomial monomial(const Exponent& e, const QRat& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Exponent& e, const QRat& c);

    int degree() const;                 // -1 for the zero polynomial
    bool is_homogeneous(int n) const;   // true for zero
    bool is_complex_valued() const;     // coefficients in span{1, î}
    bool is_real_valued() const;

    QPolynomial diff(int v) const;
    QPolynomial conj() const;           // f̄
    QPolynomial dagger() const;         // f(q̄)
    QPolynomial star() const { return conj().dagger(); }
    QPolynomial component(int e) const; // real component f^{(e)} as a real polynomial

    // Substitute real polynomials (real-valued QPolynomials) for t, x, y, z.
    QPolynomial compose(const std::array<QPolynomial, 4>& sub) const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator-(const QPolynomial& a);
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(const QRat& c, const QPolynomial& a);
    friend QPolynomial operator*(const QPolynomial& a, const QRat& c);
    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.terms_ == b.terms_; }

    template <class T>
    Quaternion<T> evaluate(const Quaternion<T>& q) const;

private:
    Terms terms_;
};

QPolynomial pow(const QPolynomial& p, int k);

// Largest coefficient coordinate in absolute value; 0 for the zero polynomial.
double max_abs(const QPolynomial& p);

// Floating-point evaluator with precomputed coefficients.
class CompiledPolynomial {
public:
    explicit CompiledPolynomial(const QPolynomial& p);
    QDbl operator()(const QDbl& q) const;
    int degree() const { return degree_; }

private:
    std::vector<std::pair<Exponent, QDbl>> terms_;
    int degree_ = 0;
};

template <class T>
Quaternion<T> QPolynomial::evaluate(const Quaternion<T>& q) const {
    Quaternion<T> r{T(0), T(0), T(0), T(0)};
    for (const auto& [e, c] : terms_) {
        T m(1);
        for (int v = 0; v < 4; ++v)
            for (int k = 0; k < e[std::size_t(v)]; ++k) m = m * q[v];
        Quaternion<T> cq;
        if constexpr (std::is_constructible_v<T, Rational>) cq = Quaternion<T>(T(c.t), T(c.x), T(c.y), T(c.z));
        else cq = Quaternion<T>(T(to_double(c.t)), T(to_double(c.x)), T(to_double(c.y)), T(to_double(c.z)));
        r += cq * m;
    }
    return r;
}

}  // namespace sp11
