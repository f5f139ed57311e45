#include "sp11/forms.hpp"

#include <cmath>

#include "sp11/dual.hpp"
#include "sp11/rep.hpp"

namespace sp11 {

namespace {

constexpr char kNames[4] = {'t', 'x', 'y', 'z'};

constexpr FormIndex bit(int v) { return FormIndex(1u << v); }

double det(std::vector<std::array<double, 4>> m) {
    const std::size_t n = m.size();
    double d = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(m[r][c]) > std::fabs(m[p][c])) p = r;
        if (m[p][c] == 0.0) return 0.0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

std::vector<int> members(FormIndex i) {
    std::vector<int> r;
    for (int v = 0; v < 4; ++v)
        if (i & bit(v)) r.push_back(v);
    return r;
}

QDbl complex_as_quaternion(const Complex& c) { return {c.real(), c.imag(), 0.0, 0.0}; }

}  // namespace

std::string index_name(FormIndex i) {
    std::string s;
    for (int v = 0; v < 4; ++v)
        if (i & bit(v)) s += kNames[v];
    return s;
}

FormIndex index_from_name(const std::string& s) {
    FormIndex i = 0;
    int last = -1;
    for (char ch : s) {
        int v = -1;
        for (int k = 0; k < 4; ++k)
            if (kNames[k] == ch) v = k;
        if (v <= last) throw DomainError("form index must be an increasing subset of txyz: " + s);
        i = FormIndex(i | bit(v));
        last = v;
    }
    return i;
}

int merge_sign(FormIndex i, FormIndex j) {
    if (i & j) return 0;
    int inversions = 0;
    for (int a : members(i))
        for (int b : members(j))
            if (a > b) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

ConstForm form_dq() {
    ConstForm f(1);
    for (int v = 0; v < 4; ++v) f.add(bit(v), QRat::basis(v));
    return f;
}

ConstForm form_dqbar() {
    ConstForm f(1);
    for (int v = 0; v < 4; ++v) f.add(bit(v), v == 0 ? QRat::one() : -QRat::basis(v));
    return f;
}

ConstForm form_dqbar_dq() { return wedge(form_dqbar(), form_dq()); }

// Dq = Σ e_i (∂_i ⌟ ω₀).
ConstForm form_Dq() {
    ConstForm f(3);
    for (int v = 0; v < 4; ++v) {
        const FormIndex rest = FormIndex(0xF & ~bit(v));
        f.add(rest, v % 2 == 0 ? QRat::basis(v) : -QRat::basis(v));
    }
    return f;
}

ConstForm form_omega0() {
    ConstForm f(4);
    f.add(0xF, QRat::one());
    return f;
}

PolyForm to_poly_form(const ConstForm& f) {
    return f.map([](const QRat& c) { return QPolynomial(c); });
}

PointForm to_point_form(const ConstForm& f) {
    return f.map([](const QRat& c) { return to_double(c); });
}

PointForm evaluate(const PolyForm& f, const QDbl& q) {
    return f.map([&](const QPolynomial& c) { return c.evaluate(q); });
}

PolyForm exterior_d(const PolyForm& w) {
    if (w.degree() == 4) return PolyForm(4);
    PolyForm r(w.degree() + 1);
    for (const auto& [i, c] : w.terms())
        for (int v = 0; v < 4; ++v) {
            const int s = merge_sign(bit(v), i);
            if (s == 0) continue;
            const QPolynomial d = c.diff(v);
            r.add(FormIndex(i | bit(v)), s > 0 ? d : -d);
        }
    return r;
}

PolyForm differential(const QPolynomial& f) {
    PolyForm r(1);
    for (int v = 0; v < 4; ++v) r.add(bit(v), f.diff(v));
    return r;
}

QDbl evaluate_on(const PointForm& f, const std::vector<QDbl>& vecs) {
    if (int(vecs.size()) != f.degree()) throw DomainError("wrong number of vectors for form evaluation");
    QDbl r{0.0, 0.0, 0.0, 0.0};
    for (const auto& [i, c] : f.terms()) {
        const auto idx = members(i);
        std::vector<std::array<double, 4>> m(idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < vecs.size(); ++b) m[a][b] = vecs[b][idx[a]];
        r += c * (idx.empty() ? 1.0 : det(m));
    }
    return r;
}

PolyForm pullback(const QPolynomial& phi, const PolyForm& w) {
    std::array<QPolynomial, 4> comp;
    for (int v = 0; v < 4; ++v) comp[std::size_t(v)] = phi.component(v);
    std::array<PolyForm, 4> dphi;
    for (int v = 0; v < 4; ++v) dphi[std::size_t(v)] = differential(comp[std::size_t(v)]);
    PolyForm r(w.degree());
    for (const auto& [i, c] : w.terms()) {
        PolyForm term = basis_form<QPolynomial>(0, c.compose(comp));
        for (int v : members(i)) term = wedge(term, dphi[std::size_t(v)]);
        r += term;
    }
    return r;
}

std::array<std::array<double, 4>, 4> mobius_jacobian(const QMatDbl& g, const QDbl& q) {
    using D = Dual<double>;
    auto lift = [](const QDbl& p) { return Quaternion<D>(D(p.t), D(p.x), D(p.y), D(p.z)); };
    const QMatrix2<D> gd{lift(g.a), lift(g.b), lift(g.c), lift(g.d)};
    std::array<std::array<double, 4>, 4> jac{};
    for (int j = 0; j < 4; ++j) {
        Quaternion<D> qd = lift(q);
        qd[j].d = 1.0;
        const Quaternion<D> den = gd.c * qd + gd.d;
        if (den.norm().v == 0.0) throw SingularDenominator("N(cq+d) = 0");
        const Quaternion<D> img = (gd.a * qd + gd.b) * den.inverse();
        for (int i = 0; i < 4; ++i) jac[std::size_t(i)][std::size_t(j)] = img[i].d;
    }
    return jac;
}

PointForm pullback_at(const std::array<std::array<double, 4>, 4>& jac, const PointForm& w) {
    PointForm r(w.degree());
    for (const auto& [i, c] : w.terms()) {
        const auto rows = members(i);
        for (unsigned k = 0; k < 16; ++k) {
            const FormIndex kk = FormIndex(k);
            if (index_degree(kk) != w.degree()) continue;
            const auto cols = members(kk);
            std::vector<std::array<double, 4>> m(rows.size());
            for (std::size_t a = 0; a < rows.size(); ++a)
                for (std::size_t b = 0; b < cols.size(); ++b)
                    m[a][b] = jac[std::size_t(rows[a])][std::size_t(cols[b])];
            const double d = rows.empty() ? 1.0 : det(m);
            if (d != 0.0) r.add(kk, c * d);
        }
    }
    return r;
}

PointForm mobius_pullback(const QMatDbl& g, const QDbl& q, const PointForm& w) {
    return pullback_at(mobius_jacobian(g, q), w);
}

PointForm mobius_pullback_closed_form(const QMatDbl& g, MobiusForm which, const QDbl& q) {
    const QDbl m = mobius_denominator(g, q);
    if (m.norm() == 0.0) throw SingularDenominator("N(cq+d) = 0");
    const QDbl c = m.inverse();
    switch (which) {
        case MobiusForm::dq: {
            const QDbl a = (g.a.conj() + q * g.b.conj()).inverse();
            return to_point_form(form_dq()).left(a).right(c);
        }
        case MobiusForm::dqbar_dq: {
            const QDbl a = m.conj().inverse() / m.norm();
            return to_point_form(form_dqbar_dq()).left(a).right(c);
        }
        case MobiusForm::Dq: {
            const QDbl a = (g.a.conj() + q * g.b.conj()).inverse();
            const double n = m.norm();
            return to_point_form(form_Dq()).left(a).right(c / (n * n));
        }
    }
    throw DomainError("unknown form");
}

PointForm dqbar_dq_closed_form_without_norm(const QMatDbl& g, const QDbl& q) {
    const QDbl m = mobius_denominator(g, q);
    return to_point_form(form_dqbar_dq()).left(m.conj().inverse()).right(m.inverse());
}

PointForm Dq_closed_form_prime(const QMatDbl& g, const QDbl& q) {
    const QDbl l = g.a.conj() + q * g.b.conj();
    return to_point_form(form_Dq()).left(prime(l)).right(prime(mobius_denominator(g, q)));
}

FormMatrix omega_forms(const std::vector<QPolynomial>& f, const std::vector<QPolynomial>& g) {
    const PolyForm dq3 = to_poly_form(form_Dq());
    FormMatrix r(g.size(), std::vector<PolyForm>(f.size(), PolyForm(3)));
    for (std::size_t j = 0; j < g.size(); ++j) {
        const QPolynomial gs = g[j].star();
        for (std::size_t i = 0; i < f.size(); ++i) r[j][i] = dq3.left(gs).right(f[i]);
    }
    return r;
}

PointFormMatrix automorphic_forms_at(const VectorFunction& f, const VectorFunction& g, AutoForm which,
                                     const QDbl& q) {
    const auto fv = f(q);
    std::vector<QDbl> gl;
    if (which == AutoForm::theta) {
        for (const auto& v : g(q)) gl.push_back(v.conj());
    } else {
        for (const auto& v : g(q.conj())) gl.push_back(v.conj());
    }
    const double s = 1.0 - q.norm();
    PointForm base;
    switch (which) {
        case AutoForm::eta: base = to_point_form(form_dq()).right(QDbl(1.0 / (s * s))); break;
        case AutoForm::theta: base = to_point_form(form_dqbar_dq()).right(QDbl(1.0 / s)); break;
        case AutoForm::omega: base = to_point_form(form_Dq()); break;
    }
    PointFormMatrix r(gl.size(), std::vector<PointForm>(fv.size(), PointForm(base.degree())));
    for (std::size_t j = 0; j < gl.size(); ++j)
        for (std::size_t i = 0; i < fv.size(); ++i) r[j][i] = base.left(gl[j]).right(fv[i]);
    return r;
}

double automorphic_transformation_residual(const VectorFunction& f, const VectorFunction& g, AutoForm which,
                                           const QMatDbl& gamma, const QDbl& q) {
    const auto jac = mobius_jacobian(gamma, q);
    const auto image = automorphic_forms_at(f, g, which, mobius_act(gamma, q));
    const auto here = automorphic_forms_at(f, g, which, q);
    const std::size_t rows = here.size(), cols = here.empty() ? 0 : here[0].size();
    const int n = int(cols) - 1;
    const QDbl m = mobius_denominator(gamma, q);
    const QDbl lam = which == AutoForm::theta ? m : gamma.a + gamma.b * q.conj();
    const Matrix<Complex> left = rn_matrix(lam, int(rows) - 1).adjoint();
    const Matrix<Complex> right = rn_matrix(m, n);
    double worst = 0.0;
    for (std::size_t j = 0; j < rows; ++j)
        for (std::size_t i = 0; i < cols; ++i) {
            PointForm expect(here[0][0].degree());
            for (std::size_t k = 0; k < rows; ++k)
                for (std::size_t l = 0; l < cols; ++l)
                    expect += here[k][l]
                                  .left(complex_as_quaternion(left(j, k)))
                                  .right(complex_as_quaternion(right(l, i)));
            worst = std::max(worst, max_abs(pullback_at(jac, image[j][i]) - expect));
        }
    return worst;
}

}  // namespace sp11
