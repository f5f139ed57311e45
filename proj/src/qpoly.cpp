#include "sp11/qpoly.hpp"

#include <algorithm>

namespace sp11 {

QPolynomial QPolynomial::variable(int v) {
    Exponent e{0, 0, 0, 0};
    e[std::size_t(v)] = 1;
    return monomial(e, QRat::one());
}

QPolynomial QPolynomial::identity() {
    QPolynomial p;
    for (int v = 0; v < 4; ++v) {
        Exponent e{0, 0, 0, 0};
        e[std::size_t(v)] = 1;
        p.add_term(e, QRat::basis(v));
    }
    return p;
}

QPolynomial QPolynomial::monomial(const Exponent& e, const QRat& c) {
    QPolynomial p;
    p.add_term(e, c);
    return p;
}

void QPolynomial::add_term(const Exponent& e, const QRat& c) {
    if (c.is_zero_q()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero_q()) terms_.erase(it);
}

int QPolynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, int(e[0]) + e[1] + e[2] + e[3]);
    return d;
}

bool QPolynomial::is_homogeneous(int n) const {
    for (const auto& [e, c] : terms_)
        if (int(e[0]) + e[1] + e[2] + e[3] != n) return false;
    return true;
}

bool QPolynomial::is_complex_valued() const {
    for (const auto& [e, c] : terms_)
        if (sgn(c.y) != 0 || sgn(c.z) != 0) return false;
    return true;
}

bool QPolynomial::is_real_valued() const {
    for (const auto& [e, c] : terms_)
        if (sgn(c.x) != 0 || sgn(c.y) != 0 || sgn(c.z) != 0) return false;
    return true;
}

QPolynomial QPolynomial::diff(int v) const {
    QPolynomial r;
    for (const auto& [e, c] : terms_) {
        const int k = e[std::size_t(v)];
        if (k == 0) continue;
        Exponent f = e;
        f[std::size_t(v)] = std::uint8_t(k - 1);
        r.add_term(f, Rational(k) * c);
    }
    return r;
}

QPolynomial QPolynomial::conj() const {
    QPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
    return r;
}

QPolynomial QPolynomial::dagger() const {
    QPolynomial r;
    for (const auto& [e, c] : terms_) {
        const bool odd = (e[1] + e[2] + e[3]) % 2 == 1;
        r.terms_.emplace(e, odd ? -c : c);
    }
    return r;
}

QPolynomial QPolynomial::component(int comp) const {
    QPolynomial r;
    for (const auto& [e, c] : terms_) r.add_term(e, QRat(c[comp]));
    return r;
}

QPolynomial QPolynomial::compose(const std::array<QPolynomial, 4>& sub) const {
    std::array<std::vector<QPolynomial>, 4> powers;
    for (std::size_t v = 0; v < 4; ++v) powers[v].push_back(QPolynomial(QRat::one()));
    QPolynomial r;
    for (const auto& [e, c] : terms_) {
        QPolynomial m(c);
        for (std::size_t v = 0; v < 4; ++v) {
            while (powers[v].size() <= e[v]) powers[v].push_back(powers[v].back() * sub[v]);
            m = m * powers[v][e[v]];
        }
        r += m;
    }
    return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

QPolynomial operator-(const QPolynomial& a) {
    QPolynomial r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e;
            for (std::size_t v = 0; v < 4; ++v) e[v] = std::uint8_t(ea[v] + eb[v]);
            r.add_term(e, ca * cb);
        }
    return r;
}

QPolynomial operator*(const QRat& c, const QPolynomial& a) {
    QPolynomial r;
    for (const auto& [e, x] : a.terms_) r.add_term(e, c * x);
    return r;
}

QPolynomial operator*(const QPolynomial& a, const QRat& c) {
    QPolynomial r;
    for (const auto& [e, x] : a.terms_) r.add_term(e, x * c);
    return r;
}

QPolynomial pow(const QPolynomial& p, int k) {
    QPolynomial r(QRat::one());
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

CompiledPolynomial::CompiledPolynomial(const QPolynomial& p) {
    for (const auto& [e, c] : p.terms()) terms_.emplace_back(e, to_double(c));
    degree_ = std::max(0, p.degree());
}

QDbl CompiledPolynomial::operator()(const QDbl& q) const {
    std::array<std::vector<double>, 4> pw;
    for (int v = 0; v < 4; ++v) {
        auto& row = pw[std::size_t(v)];
        row.resize(std::size_t(degree_ + 1));
        row[0] = 1.0;
        for (int k = 1; k <= degree_; ++k) row[std::size_t(k)] = row[std::size_t(k - 1)] * q[v];
    }
    QDbl r{0.0, 0.0, 0.0, 0.0};
    for (const auto& [e, c] : terms_) {
        const double m = pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * pw[3][e[3]];
        r.t += c.t * m;
        r.x += c.x * m;
        r.y += c.y * m;
        r.z += c.z * m;
    }
    return r;
}

double max_abs(const QPolynomial& p) {
    double m = 0.0;
    for (const auto& [e, c] : p.terms()) m = std::max(m, max_abs(c));
    return m;
}

}  // namespace sp11
