#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sp11/group.hpp"
#include "sp11/matrix.hpp"

namespace sp11 {

inline constexpr std::size_t kLieDim = 10;

// Coordinates in the ordered basis S = S₁ ∪ S₂ of sp(1,1):
// S₁ = diag(î,0), diag(ĵ,0), diag(k̂,0), diag(0,î), diag(0,ĵ), diag(0,k̂);
// S₂ = [[0,b],[b̄,0]] for b = 1, î, ĵ, k̂.
template <class C>
struct LieVec {
    std::array<C, kLieDim> c{};

    friend LieVec operator+(LieVec a, const LieVec& b) {
        for (std::size_t i = 0; i < kLieDim; ++i) a.c[i] += b.c[i];
        return a;
    }
    friend LieVec operator-(LieVec a, const LieVec& b) {
        for (std::size_t i = 0; i < kLieDim; ++i) a.c[i] -= b.c[i];
        return a;
    }
    friend LieVec operator*(const C& s, LieVec a) {
        for (auto& v : a.c) v = s * v;
        return a;
    }
    friend bool operator==(const LieVec& a, const LieVec& b) { return a.c == b.c; }
    bool is_zero_vec() const {
        for (const auto& v : c)
            if (!is_zero(v)) return false;
        return true;
    }
};

using LieVector = LieVec<Rational>;
using ComplexLieVector = LieVec<GaussRational>;

template <class C>
QMatrix2<C> to_matrix(const LieVec<C>& v) {
    using Q = Quaternion<C>;
    const C z(0);
    QMatrix2<C> m{Q(z, v.c[0], v.c[1], v.c[2]), Q(v.c[6], v.c[7], v.c[8], v.c[9]), {}, Q(z, v.c[3], v.c[4], v.c[5])};
    m.c = m.b.conj();
    return m;
}

template <class C>
LieVec<C> decompose(const QMatrix2<C>& m) {
    if (!is_zero(m.a.t) || !is_zero(m.d.t) || m.c != m.b.conj())
        throw BasisDecompositionError("matrix is not in span(S)");
    return {{m.a.x, m.a.y, m.a.z, m.d.x, m.d.y, m.d.z, m.b.t, m.b.x, m.b.y, m.b.z}};
}

template <class C>
LieVec<C> basis_vector(std::size_t i) {
    LieVec<C> v;
    for (auto& x : v.c) x = C(0);
    v.c[i] = C(1);
    return v;
}

template <class C>
LieVec<C> bracket(const LieVec<C>& x, const LieVec<C>& y) {
    const QMatrix2<C> mx = to_matrix(x), my = to_matrix(y);
    return decompose(mx * my - my * mx);
}

template <class C>
Matrix<C> ad_matrix(const LieVec<C>& x) {
    Matrix<C> r(kLieDim, kLieDim);
    for (std::size_t j = 0; j < kLieDim; ++j) {
        const auto col = bracket(x, basis_vector<C>(j));
        for (std::size_t i = 0; i < kLieDim; ++i) r(i, j) = col.c[i];
    }
    return r;
}

// B(X, Y) = tr(ad X ∘ ad Y).
template <class C>
C killing(const LieVec<C>& x, const LieVec<C>& y) {
    const Matrix<C> p = ad_matrix(x) * ad_matrix(y);
    C t(0);
    for (std::size_t i = 0; i < kLieDim; ++i) t += p(i, i);
    return t;
}

ComplexLieVector complexify(const LieVector& v);

// su(2) = H₀ with basis î, ĵ, k̂ and bracket ab - ba.
std::array<Rational, 3> su2_bracket(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b);
Matrix<Rational> su2_ad_matrix(const std::array<Rational, 3>& a);

enum class Algebra { su2, sp11 };
Matrix<Rational> killing_matrix(Algebra alg);

// μ = rα + sβ.
struct RootLabel {
    int r = 0, s = 0;
    RootLabel operator-() const { return {-r, -s}; }
    friend bool operator==(const RootLabel& a, const RootLabel& b) { return a.r == b.r && a.s == b.s; }
};

bool is_root(const RootLabel& mu);
bool is_compact_root(const RootLabel& mu);
std::vector<RootLabel> roots();

// E_μ = v / √radicand with the convention √r·√r = r for equal radicands.
struct RootVector {
    ComplexLieVector v;
    int radicand;
};

RootVector root_vector(const RootLabel& mu);

// μ(diag(zî, wî)) = i(rz + sw).
GaussRational root_value(const RootLabel& mu, const GaussRational& z, const GaussRational& w);
ComplexLieVector cartan_diag(const GaussRational& z, const GaussRational& w);
ComplexLieVector cartan_element(const RootLabel& mu);

// B(E_μ, E_ν) as an exact Gaussian rational; nullopt if the radicands differ
// and the unnormalised pairing is nonzero.
std::optional<GaussRational> killing_root(const RootVector& e, const RootVector& f);

// [E_μ, E_ν] when both carry the same radicand.
ComplexLieVector bracket_root(const RootVector& e, const RootVector& f);

// [H, E_μ] - μ(H) E_μ for H = diag(zî, wî), on the unnormalised part.
ComplexLieVector root_equation_defect(const RootLabel& mu, const GaussRational& z, const GaussRational& w);

// (e, f, h) = ((ĵ - ik̂)/2, (-ĵ - ik̂)/2, -iî) in H₀ ⊗ C.
struct Sl2Triple {
    CQRat e, f, h;
};
Sl2Triple sl2_triple_map();

}  // namespace sp11
