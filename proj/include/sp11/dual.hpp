#pragma once

#include <cmath>

#include "sp11/scalar.hpp"

namespace sp11 {

// Forward-mode dual numbers v + d·ε with ε² = 0.
template <class T>
struct Dual {
    T v{}, d{};

    Dual() = default;
    Dual(T value) : v(std::move(value)), d(0) {}
    Dual(T value, T deriv) : v(std::move(value)), d(std::move(deriv)) {}
    Dual(int value) : v(value), d(0) {}

    Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
    Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }

    friend Dual operator+(Dual a, const Dual& b) { return a += b; }
    friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
    friend Dual operator-(const Dual& a) { return Dual(T(-a.v), T(-a.d)); }
    friend Dual operator*(const Dual& a, const Dual& b) { return Dual(T(a.v * b.v), T(a.v * b.d + a.d * b.v)); }
    friend Dual operator/(const Dual& a, const Dual& b) {
        return Dual(T(a.v / b.v), T((a.d * b.v - a.v * b.d) / (b.v * b.v)));
    }
    friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v && a.d == b.d; }
};

template <class T>
bool is_zero(const Dual<T>& a) { return is_zero(a.v); }

template <class T>
double magnitude(const Dual<T>& a) { return magnitude(a.v); }

}  // namespace sp11
