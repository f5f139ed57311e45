#include "sp11/fueter.hpp"

#include "sp11/dual.hpp"

namespace sp11 {

namespace {

QRat cplx(long re, long im) { return QRat(Rational(re), Rational(im), Rational(0), Rational(0)); }

Rational factorial(int m) {
    Rational r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
}

std::vector<Rational> upoly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

QPolynomial fueter_apply(const QPolynomial& f, FueterOp op) {
    const bool bar = op == FueterOp::dl_bar || op == FueterOp::dr_bar;
    const bool left = op == FueterOp::dl || op == FueterOp::dl_bar;
    QPolynomial r = f.diff(0);
    for (int v = 1; v < 4; ++v) {
        const QRat e = bar ? QRat::basis(v) : -QRat::basis(v);
        const QPolynomial d = f.diff(v);
        r += left ? e * d : d * e;
    }
    return r;
}

QPolynomial involution(const QPolynomial& f, Involution which) {
    switch (which) {
        case Involution::bar: return f.conj();
        case Involution::dag: return f.dagger();
        case Involution::star: return f.star();
    }
    return f;
}

QPolynomial laplacian(const QPolynomial& f) {
    QPolynomial r;
    for (int v = 0; v < 4; ++v) r += f.diff(v).diff(v);
    return r;
}

QPolynomial z_coord() { return QPolynomial::variable(0) + cplx(0, 1) * QPolynomial::variable(1); }
QPolynomial zbar_coord() { return QPolynomial::variable(0) - cplx(0, 1) * QPolynomial::variable(1); }
QPolynomial w_coord() { return QPolynomial::variable(2) + cplx(0, 1) * QPolynomial::variable(3); }
QPolynomial wbar_coord() { return QPolynomial::variable(2) - cplx(0, 1) * QPolynomial::variable(3); }

QPolynomial d_z(const QPolynomial& f) {
    return QRat(Rational(1, 2)) * (f.diff(0) - cplx(0, 1) * f.diff(1));
}
QPolynomial d_zbar(const QPolynomial& f) {
    return QRat(Rational(1, 2)) * (f.diff(0) + cplx(0, 1) * f.diff(1));
}
QPolynomial d_w(const QPolynomial& f) {
    return QRat(Rational(1, 2)) * (f.diff(2) - cplx(0, 1) * f.diff(3));
}
QPolynomial d_wbar(const QPolynomial& f) {
    return QRat(Rational(1, 2)) * (f.diff(2) + cplx(0, 1) * f.diff(3));
}

QPolynomial divided_power(const QPolynomial& p, int m) {
    if (m < 0) return {};
    return QRat(Rational(1) / factorial(m)) * pow(p, m);
}

QPolynomial p_kl(int n, int k, int l) {
    if (n < 0) throw DomainError("p_kl needs n >= 0");
    QPolynomial r;
    if (k < 0 || l < 0) return r;
    const QPolynomial z = z_coord(), zb = zbar_coord(), w = w_coord(), wb = wbar_coord();
    for (int s = 0; s <= n; ++s) {
        const int a = n - k - l + s, c = k - s, d = l - s;
        if (a < 0 || c < 0 || d < 0) continue;
        QPolynomial term = divided_power(z, a) * divided_power(zb, s) * divided_power(w, c) * divided_power(wb, d);
        r += (s % 2 == 0) ? term : -term;
    }
    return r;
}

QPolynomial q_kl(int n, int k, int l) {
    return p_kl(n, k, l) - QRat::j() * p_kl(n, k - 1, l);
}

VnFunction vn_diff(const VnFunction& f, bool by_x) {
    const int n = int(f.size()) - 1;
    if (n <= 0) return VnFunction(1);
    VnFunction r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (by_x) r[std::size_t(i)] = QRat(Rational(n - i)) * f[std::size_t(i)];
        else r[std::size_t(i)] = QRat(Rational(i + 1)) * f[std::size_t(i + 1)];
    }
    return r;
}

std::vector<QPolynomial> x_minus_j_y(const VnFunction& f) {
    const VnFunction fx = vn_diff(f, true), fy = vn_diff(f, false);
    std::vector<QPolynomial> h(fx.size());
    for (std::size_t i = 0; i < fx.size(); ++i) h[i] = fx[i] - QRat::j() * fy[i];
    return h;
}

MinimalKType minimal_ktype(int n, int k) {
    if (k < 0 || k > n) throw DomainError("minimal_ktype needs 0 <= k <= n");
    VnFunction g(std::size_t(n + 1));
    for (int i = 0; i <= n; ++i) {
        const int l = n - i;
        g[std::size_t(i)] = QRat(Rational(1) / (factorial(l) * factorial(i))) * p_kl(n, l, k);
    }
    return {g, x_minus_j_y(g)};
}

std::vector<QPolynomial> dirac_lz_tensor_path(const VnFunction& f) {
    const int n = int(f.size()) - 1;
    if (n < 1) throw DomainError("dirac_lz needs n >= 1");
    for (const auto& c : f)
        if (!c.is_complex_valued()) throw DomainError("VnFunction coefficients must be complex valued");
    // E_i ↦ ι(e_i) as an element of V₁ ⊗ V₁*: row X/Y, column ∂_X/∂_Y.
    std::array<Matrix2<QRat>, 4> e;
    e[0] = {{{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(1, 0)}}};
    e[1] = {{{cplx(0, 1), cplx(0, 0)}, {cplx(0, 0), cplx(0, -1)}}};
    e[2] = {{{cplx(0, 0), cplx(1, 0)}, {cplx(-1, 0), cplx(0, 0)}}};
    e[3] = {{{cplx(0, 0), cplx(0, 1)}, {cplx(0, 1), cplx(0, 0)}}};
    std::array<VnFunction, 4> grad;
    for (int i = 0; i < 4; ++i) {
        grad[std::size_t(i)].resize(f.size());
        for (std::size_t c = 0; c < f.size(); ++c) grad[std::size_t(i)][c] = f[c].diff(i);
    }
    // Contract V₁* against V_n (P⁻), leaving V₁ ⊗ V_{n-1}.
    std::array<std::vector<QPolynomial>, 2> part{std::vector<QPolynomial>(std::size_t(n)),
                                                 std::vector<QPolynomial>(std::size_t(n))};
    for (int i = 0; i < 4; ++i) {
        const VnFunction dx = vn_diff(grad[std::size_t(i)], true), dy = vn_diff(grad[std::size_t(i)], false);
        for (std::size_t u = 0; u < 2; ++u)
            for (std::size_t c = 0; c < std::size_t(n); ++c)
                part[u][c] += e[std::size_t(i)][u][0] * dx[c] + e[std::size_t(i)][u][1] * dy[c];
    }
    // V₁ ⊗ V_{n-1} → W_{n-1}: X ↦ 1, Y ↦ -ĵ.
    std::vector<QPolynomial> r(static_cast<std::size_t>(n));
    const QRat scale(Rational(1, 24));
    for (std::size_t c = 0; c < std::size_t(n); ++c) r[c] = scale * (part[0][c] - QRat::j() * part[1][c]);
    return r;
}

std::vector<QPolynomial> dirac_lz_operator_path(const VnFunction& f) {
    if (f.size() < 2) throw DomainError("dirac_lz needs n >= 1");
    auto h = x_minus_j_y(f);
    const QRat scale(Rational(1, 24));
    for (auto& c : h) c = scale * fueter_apply(c, FueterOp::dl_bar);
    return h;
}

std::vector<QPolynomial> dirac_lz(const VnFunction& f) {
    auto a = dirac_lz_tensor_path(f);
    auto b = dirac_lz_operator_path(f);
    if (a != b) throw DiagramMismatch("tensor and operator paths of the Dirac operator differ");
    return b;
}

std::vector<QPolynomial> hwt_expression(const std::vector<QPolynomial>& h) {
    const auto hy = vn_diff(h, false), hx = vn_diff(h, true);
    std::vector<QPolynomial> r(hy.size());
    for (std::size_t i = 0; i < hy.size(); ++i) r[i] = hy[i] - QRat::j() * hx[i];
    if (h.size() < 2) return {};
    return r;
}

QRat QCurve::operator()(const Rational& s) const {
    QRat r;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * s + *it;
    return r;
}

QCurve QCurve::derivative() const {
    QCurve d;
    for (std::size_t k = 1; k < c.size(); ++k) d.c.push_back(Rational(long(k)) * c[k]);
    return d;
}

QCurve operator*(const QCurve& a, const QCurve& b) {
    QCurve r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, QRat());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

std::vector<Rational> QCurve::component(int e) const {
    std::vector<Rational> r;
    for (const auto& q : c) r.push_back(q[e]);
    return r;
}

QRat composed_derivative(const QPolynomial& f, const QCurve& g, const Rational& s0) {
    std::array<std::vector<Rational>, 4> comp;
    for (int v = 0; v < 4; ++v) comp[std::size_t(v)] = g.component(v);
    QCurve fg;
    for (const auto& [e, coeff] : f.terms()) {
        std::vector<Rational> m{Rational(1)};
        for (std::size_t v = 0; v < 4; ++v)
            for (int k = 0; k < e[v]; ++k) m = upoly_mul(m, comp[v]);
        if (fg.c.size() < m.size()) fg.c.resize(m.size());
        for (std::size_t k = 0; k < m.size(); ++k) fg.c[k] += coeff * m[k];
    }
    return fg.derivative()(s0);
}

QRat curve_derivative(const QPolynomial& f, const QCurve& g, const Rational& s0) {
    const QRat p = g(s0), gs = g.derivative()(s0);
    QRat r;
    for (int v = 0; v < 4; ++v) r += f.diff(v).evaluate(p) * gs[v];
    return r;
}

QRat inverse_derivative_dual(const QCurve& g, const Rational& s0) {
    using D = Dual<Rational>;
    const D s(s0, Rational(1));
    Quaternion<D> val{D(0), D(0), D(0), D(0)};
    for (auto it = g.c.rbegin(); it != g.c.rend(); ++it)
        val = val * s + Quaternion<D>(D(it->t), D(it->x), D(it->y), D(it->z));
    const Quaternion<D> inv = val.inverse();
    return {inv.t.d, inv.x.d, inv.y.d, inv.z.d};
}

}  // namespace sp11
