#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "sp11/matrix.hpp"
#include "sp11/quaternion.hpp"

namespace sp11 {

// Seeded sampler. Only the raw mt19937_64 stream is used, never the standard
// distributions, so draws are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform integer in [lo, hi].
    long uniform_int(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do v = eng_();
        while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double normal() {
        double u1;
        do u1 = uniform01();
        while (u1 == 0.0);
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    // p/q with 1 ≤ q ≤ max_den and |p/q| ≤ bound.
    Rational rational(long max_den = 32, const Rational& bound = Rational(1)) {
        const long q = uniform_int(1, max_den);
        const Rational lim = bound * q;
        const long pmax = static_cast<long>(mpz_class(lim.get_num() / lim.get_den()).get_si());
        return make_rational(uniform_int(-pmax, pmax), q);
    }

    QRat rational_quaternion(long max_den = 32, const Rational& bound = Rational(1)) {
        return {rational(max_den, bound), rational(max_den, bound), rational(max_den, bound),
                rational(max_den, bound)};
    }

    // Rational point with N q < radius²; default radius 3/4.
    QRat ball_point(long max_den = 32, const Rational& radius = Rational(3, 4)) {
        const Rational r2 = radius * radius;
        for (;;) {
            QRat q = rational_quaternion(max_den, radius);
            if (q.norm() < r2) return q;
        }
    }

    QDbl ball_point_double(double radius = 0.75) {
        for (;;) {
            QDbl q{uniform(-radius, radius), uniform(-radius, radius), uniform(-radius, radius),
                   uniform(-radius, radius)};
            if (q.norm() < radius * radius) return q;
        }
    }

    QDbl gaussian_quaternion() { return {normal(), normal(), normal(), normal()}; }

    QDbl unit_quaternion() {
        QDbl q = gaussian_quaternion();
        return q / std::sqrt(q.norm());
    }

    GaussRational gauss_rational(long max_den = 8) { return {rational(max_den), rational(max_den)}; }
    Complex complex_normal() { return {normal(), normal()}; }

private:
    std::mt19937_64 eng_;
};

}  // namespace sp11
