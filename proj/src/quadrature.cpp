#include "sp11/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace sp11 {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw DomainError("Gauss-Legendre needs at least one node");
    // P_n(x) and P_n'(x) by the three-term recurrence.
    auto legendre = [n](double x) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
    };
    GaussLegendre r;
    r.nodes.resize(std::size_t(n));
    r.weights.resize(std::size_t(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            const auto [p, dp] = legendre(x);
            const double dx = p / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        const double dp = legendre(x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[std::size_t(i)] = -x;
        r.nodes[std::size_t(n - 1 - i)] = x;
        r.weights[std::size_t(i)] = w;
        r.weights[std::size_t(n - 1 - i)] = w;
    }
    if (n % 2 == 1) r.nodes[std::size_t(n / 2)] = 0.0;
    return r;
}

SphereCounts sphere_counts(int level) {
    if (level < 1) throw DomainError("quadrature level must be >= 1");
    const int m = 4 * level + 4;
    return {m, m, m};
}

SphereRule sphere_rule(const QDbl& center, double radius, int level) {
    if (!(radius > 0.0)) throw DomainError("sphere radius must be positive");
    const SphereCounts nc = sphere_counts(level);
    const GaussLegendre gc = gauss_legendre(nc.chi), gt = gauss_legendre(nc.theta);
    SphereRule rule{center, radius, {}};
    const double r3 = radius * radius * radius;
    const double dphi = 2.0 * kPi / nc.phi;
    for (int a = 0; a < nc.chi; ++a) {
        const double chi = 0.5 * kPi * (gc.nodes[std::size_t(a)] + 1.0);
        const double wchi = 0.5 * kPi * gc.weights[std::size_t(a)];
        const double sc = std::sin(chi), cc = std::cos(chi);
        for (int b = 0; b < nc.theta; ++b) {
            const double th = 0.5 * kPi * (gt.nodes[std::size_t(b)] + 1.0);
            const double wth = 0.5 * kPi * gt.weights[std::size_t(b)];
            const double st = std::sin(th), ct = std::cos(th);
            for (int c = 0; c < nc.phi; ++c) {
                const double ph = (c + 0.5) * dphi;
                const double sp = std::sin(ph), cp = std::cos(ph);
                const QDbl n{cc, sc * ct, sc * st * cp, sc * st * sp};
                const QDbl e1{-sc, cc * ct, cc * st * cp, cc * st * sp};
                const QDbl e2{0.0, -st, ct * cp, ct * sp};
                QDbl e3{0.0, 0.0, -sp, cp};
                const double orient = evaluate_on(to_point_form(form_omega0()), {n, e1, e2, e3}).t;
                if (orient < 0.0) e3 = -e3;
                SphereNode node;
                node.normal = n;
                node.point = center + radius * n;
                node.weight = r3 * sc * sc * st * wchi * wth * dphi;
                node.frame = {e1, e2, e3};
                rule.nodes.push_back(node);
            }
        }
    }
    return rule;
}

QDbl pairwise_sum(const std::vector<QDbl>& v) {
    if (v.empty()) return {0.0, 0.0, 0.0, 0.0};
    std::vector<QDbl> cur = v;
    while (cur.size() > 1) {
        std::vector<QDbl> next((cur.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < cur.size(); i += 2) next[i / 2] = cur[i] + cur[i + 1];
        if (cur.size() % 2 == 1) next.back() = cur.back();
        cur.swap(next);
    }
    return cur[0];
}

QDbl integrate_3form(const FrameIntegrand& w, const SphereRule& rule) {
    std::vector<QDbl> parts;
    parts.reserve(rule.nodes.size());
    for (const auto& node : rule.nodes) parts.push_back(w(node.point, node.frame) * node.weight);
    return pairwise_sum(parts);
}

QDbl integrate_3form(const std::function<PointForm(const QDbl&)>& w, const SphereRule& rule) {
    return integrate_3form(
        [&](const QDbl& p, const std::array<QDbl, 3>& fr) {
            const PointForm f = w(p);
            if (f.degree() != 3) throw EvaluationError("integrand is not a 3-form");
            return evaluate_on(f, {fr[0], fr[1], fr[2]});
        },
        rule);
}

QDbl cauchy_kernel(const QDbl& q) {
    const double n = q.norm();
    return q.inverse(1e-300) / n;
}

namespace {

// Dq evaluated on an oriented frame.
QDbl dq_on_frame(const std::array<QDbl, 3>& fr) {
    static const PointForm dq = to_point_form(form_Dq());
    return evaluate_on(dq, {fr[0], fr[1], fr[2]});
}

}  // namespace

QDbl cauchy_fueter_value(const QPolynomial& f, const QDbl& q0, double radius, int level) {
    const CompiledPolynomial cf(f);
    const SphereRule rule = sphere_rule(q0, radius, level);
    const QDbl total = integrate_3form(
        [&](const QDbl& p, const std::array<QDbl, 3>& fr) { return cauchy_kernel(p - q0) * dq_on_frame(fr) * cf(p); },
        rule);
    return total / (2.0 * kPi * kPi);
}

QDbl laurent_b(const QPolynomial& f, const QPolynomial& p, const SphereRule& rule) {
    const CompiledPolynomial cf(f), cp(p);
    const QDbl total = integrate_3form(
        [&](const QDbl& x, const std::array<QDbl, 3>& fr) { return cp(x - rule.center) * dq_on_frame(fr) * cf(x); },
        rule);
    return total / (2.0 * kPi * kPi);
}

StokesResult stokes_residual(const PolyForm& w, const BoxRule& box) {
    if (w.degree() != 3) throw DomainError("stokes_residual expects a 3-form");
    for (double e : box.extents)
        if (!(e > 0.0)) throw DomainError("box extents must be positive");
    const GaussLegendre gl = gauss_legendre(box.nodes_per_axis);
    const int n = box.nodes_per_axis;
    auto coord = [&](int axis, int k) {
        return box.corner[std::size_t(axis)] + 0.5 * box.extents[std::size_t(axis)] * (gl.nodes[std::size_t(k)] + 1.0);
    };
    auto wt = [&](int axis, int k) { return 0.5 * box.extents[std::size_t(axis)] * gl.weights[std::size_t(k)]; };

    // Interior: ∫ dω = ∫ c ω₀.
    const QPolynomial top = exterior_d(w).coeff(0xF);
    const CompiledPolynomial ctop(top);
    std::vector<QDbl> inner;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    const QDbl p{coord(0, a), coord(1, b), coord(2, c), coord(3, d)};
                    inner.push_back(ctop(p) * (wt(0, a) * wt(1, b) * wt(2, c) * wt(3, d)));
                }

    // Boundary: the face x_i = const carries the coefficient of dx over the
    // other three axes, with sign ±(-1)^i for the outward normal ±e_i.
    std::vector<QDbl> outer;
    for (int axis = 0; axis < 4; ++axis) {
        const FormIndex rest = FormIndex(0xF & ~(1u << axis));
        const CompiledPolynomial c(w.coeff(rest));
        std::array<int, 3> others{};
        for (int v = 0, k = 0; v < 4; ++v)
            if (v != axis) others[std::size_t(k++)] = v;
        const double parity = axis % 2 == 0 ? 1.0 : -1.0;
        for (int side = 0; side < 2; ++side) {
            const double s = (side == 1 ? 1.0 : -1.0) * parity;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int d = 0; d < n; ++d) {
                        QDbl p;
                        p[axis] = box.corner[std::size_t(axis)] + (side == 1 ? box.extents[std::size_t(axis)] : 0.0);
                        p[others[0]] = coord(others[0], a);
                        p[others[1]] = coord(others[1], b);
                        p[others[2]] = coord(others[2], d);
                        outer.push_back(c(p) * (s * wt(others[0], a) * wt(others[1], b) * wt(others[2], d)));
                    }
        }
    }
    return {pairwise_sum(outer), pairwise_sum(inner)};
}

}  // namespace sp11
