#include "sp11/arith.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace sp11 {

namespace {

bool is_integer(const Rational& r) { return r.get_den() == 1; }

QDbl complex_as_quaternion(const Complex& c) { return {c.real(), c.imag(), 0.0, 0.0}; }

std::vector<QDbl> times_rep(const std::vector<QDbl>& h, const Matrix<Complex>& r) {
    std::vector<QDbl> out(r.cols(), QDbl{0.0, 0.0, 0.0, 0.0});
    for (std::size_t i = 0; i < r.cols(); ++i)
        for (std::size_t l = 0; l < h.size(); ++l) out[i] += h[l] * complex_as_quaternion(r(l, i));
    return out;
}

}  // namespace

QRat OrderElement::value() const {
    const Rational h = make_rational(c[3], 2);
    return {Rational(c[0]) + h, Rational(c[1]) + h, Rational(c[2]) + h, h};
}

std::array<Rational, 4> hurwitz_coordinates(const QRat& q) {
    const Rational d = 2 * q.z;
    return {q.t - q.z, q.x - q.z, q.y - q.z, d};
}

OrderElement OrderElement::from(const QRat& q) {
    const auto co = hurwitz_coordinates(q);
    OrderElement e;
    for (std::size_t k = 0; k < 4; ++k) {
        if (!is_integer(co[k])) throw DomainError("quaternion is not in the Hurwitz order");
        e.c[k] = co[k].get_num().get_si();
    }
    return e;
}

bool order_contains(const QRat& q) {
    long parity = -1;
    for (int e = 0; e < 4; ++e) {
        const Rational d = 2 * q[e];
        if (!is_integer(d)) return false;
        const long p = mpz_class(d.get_num() % 2).get_si() != 0 ? 1 : 0;
        if (parity >= 0 && p != parity) return false;
        parity = p;
    }
    return true;
}

namespace {

// Hurwitz quaternions stored as doubled integer coordinates.
using Doubled = std::array<long, 4>;

Doubled dmul(const Doubled& p, const Doubled& q) {
    return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
            p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

Doubled dconj(const Doubled& p) { return {p[0], -p[1], -p[2], -p[3]}; }

QRat undouble(const Doubled& p) {
    return {make_rational(p[0], 2), make_rational(p[1], 2), make_rational(p[2], 2), make_rational(p[3], 2)};
}

// Doubled coordinates a_i with Σa_i² = 4n, all even or all odd.
std::vector<Doubled> doubled_of_norm(long n) {
    std::vector<Doubled> out;
    if (n < 0) return out;
    const long lim = static_cast<long>(std::sqrt(double(4 * n))) + 1;
    for (long a = -lim; a <= lim; ++a)
        for (long b = -lim; b <= lim; ++b)
            for (long c = -lim; c <= lim; ++c) {
                const long rest = 4 * n - a * a - b * b - c * c;
                if (rest < 0) continue;
                const long d = static_cast<long>(std::llround(std::sqrt(double(rest))));
                if (d * d != rest) continue;
                for (long sign = 0; sign < (d == 0 ? 1 : 2); ++sign) {
                    const long dd = sign == 0 ? d : -d;
                    const long par = a & 1;
                    if ((b & 1) != par || (c & 1) != par || (dd & 1) != par) continue;
                    out.push_back({a, b, c, dd});
                }
            }
    return out;
}

// 2q as integers when q lies in the order.
std::optional<Doubled> to_doubled(const QRat& q) {
    if (!order_contains(q)) return std::nullopt;
    Doubled d;
    for (int e = 0; e < 4; ++e) d[std::size_t(e)] = Rational(2 * q[e]).get_num().get_si();
    return d;
}

}  // namespace

double gz_membership(const QMatRat& g) {
    const auto a = to_doubled(g.a), b = to_doubled(g.b), c = to_doubled(g.c), d = to_doubled(g.d);
    if (a && b && c && d) {
        // g* diag(1,-1) g - diag(1,-1) in doubled coordinates, scaled by 4.
        auto sub = [](const Doubled& x, const Doubled& y) {
            return Doubled{x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
        };
        const Doubled e11 = sub(dmul(dconj(*a), *a), dmul(dconj(*c), *c));
        const Doubled e12 = sub(dmul(dconj(*a), *b), dmul(dconj(*c), *d));
        const Doubled e22 = sub(dmul(dconj(*b), *b), dmul(dconj(*d), *d));
        long worst = std::max({std::labs(e11[0] - 4), std::labs(e22[0] + 4)});
        for (int k = 1; k < 4; ++k) worst = std::max({worst, std::labs(e11[std::size_t(k)]), std::labs(e22[std::size_t(k)])});
        for (long v : e12) worst = std::max(worst, std::labs(v));
        return double(worst) / 4.0;
    }
    double r = max_abs(unitary_defect(g));
    for (const QRat* e : {&g.a, &g.b, &g.c, &g.d})
        if (!order_contains(*e)) r = std::max(r, 1.0);
    return r;
}

IntegralGroupElement::IntegralGroupElement(QMatRat g) : g_(std::move(g)) {
    if (gz_membership(g_) != 0.0) throw DomainError("matrix is not in G(Z)");
}

Level::Level(long v) : n(v) {
    if (v < 1) throw ConfigError("level must be a positive integer");
}

bool gammaN_membership(const IntegralGroupElement& g, Level level) {
    const QMatRat d = g.matrix() - QMatRat::identity();
    const Rational inv(1, level.n);
    for (const QRat* e : {&d.a, &d.b, &d.c, &d.d})
        if (!order_contains(inv * *e)) return false;
    return true;
}

bool gammaN_by_reduction(const IntegralGroupElement& g, Level level) {
    const QMatRat d = g.matrix() - QMatRat::identity();
    for (const QRat* e : {&d.a, &d.b, &d.c, &d.d}) {
        const OrderElement o = OrderElement::from(*e);
        for (long v : o.c)
            if (v % level.n != 0) return false;
    }
    return true;
}

std::vector<QRat> hurwitz_of_norm(long n) {
    std::vector<QRat> out;
    for (const auto& p : doubled_of_norm(n)) out.push_back(undouble(p));
    return out;
}

std::vector<QRat> hurwitz_units() { return hurwitz_of_norm(1); }

std::vector<IntegralGroupElement> search_gz(long height) {
    std::vector<IntegralGroupElement> out;
    std::vector<std::vector<Doubled>> by_norm(std::size_t(std::max(height, 1L) + 1));
    for (long n = 0; n <= height; ++n) by_norm[std::size_t(n)] = doubled_of_norm(n);
    const auto& units = by_norm[1];
    // c = 0 forces b = 0 and unit diagonal.
    for (const auto& a : units)
        for (const auto& d : units) out.emplace_back(QMatRat{undouble(a), QRat(), QRat(), undouble(d)});
    // c ≠ 0: N a = N c + 1, N d = N b + 1, ā b = c̄ d, so d = c̄⁻¹ ā b = c ā b / N c.
    // In doubled coordinates 2d = (2c)(2ā)(2b) / (4 N c).
    for (long nc = 1; nc + 1 <= height; ++nc) {
        const long den = 4 * nc;
        for (const auto& c : by_norm[std::size_t(nc)])
            for (const auto& a : by_norm[std::size_t(nc + 1)]) {
                const Doubled ca = dmul(c, dconj(a));
                for (long nb = 0; nb + 1 <= height; ++nb)
                    for (const auto& b : by_norm[std::size_t(nb)]) {
                        const Doubled p = dmul(ca, b);
                        if (p[0] % den || p[1] % den || p[2] % den || p[3] % den) continue;
                        const Doubled d{p[0] / den, p[1] / den, p[2] / den, p[3] / den};
                        if (d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3] != 4 * (nb + 1)) continue;
                        const long par = d[0] & 1;
                        if ((d[1] & 1) != par || (d[2] & 1) != par || (d[3] & 1) != par) continue;
                        out.emplace_back(QMatRat{undouble(a), undouble(b), undouble(c), undouble(d)});
                    }
            }
    }
    return out;
}

QRat hurwitz_omega() { return {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}; }

std::vector<QMatRat> finite_diagonal_subgroup() {
    std::vector<QRat> powers{QRat::one()};
    for (int k = 1; k < 6; ++k) powers.push_back(powers.back() * hurwitz_omega());
    std::vector<QMatRat> out;
    for (const auto& u : powers)
        for (const auto& v : powers) out.push_back(QMatRat::diag(u, v));
    return out;
}

double automorphy_residual(const RowFunction& h, const QMatDbl& g, const QDbl& q, int n, Side side) {
    const QDbl m = weight_quaternion(g, q, side);
    if (m.norm() == 0.0) throw SingularDenominator("automorphy factor vanishes");
    const auto lhs = h(mobius_act(g, q));
    auto hq = h(q);
    for (auto& v : hq) v = m.norm() * (m * v);
    const auto rhs = times_rep(hq, rn_matrix(m, n - 1));
    double worst = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) worst = std::max(worst, max_abs(lhs[i] - rhs[i]));
    return worst;
}

RowFunction symmetrize(const RowFunction& h, const std::vector<QMatRat>& group, int n) {
    std::vector<QMatDbl> gs;
    for (const auto& g : group) gs.push_back(to_double(g));
    return [h, gs, n](const QDbl& q) {
        std::vector<QDbl> acc;
        for (const auto& g : gs) {
            const QDbl m = mobius_denominator(g, q);
            const QDbl minv = m.inverse();
            auto v = h(mobius_act(g, q));
            for (auto& x : v) x = (minv * x) / m.norm();
            v = times_rep(v, rn_matrix(minv, n - 1));
            if (acc.empty()) acc = v;
            else
                for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i];
        }
        for (auto& x : acc) x = x / double(gs.size());
        return acc;
    };
}

}  // namespace sp11
