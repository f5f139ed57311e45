#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sp11/group.hpp"
#include "sp11/qpoly.hpp"

namespace sp11 {

// Subset of {t, x, y, z} as a bitmask; bit v is coordinate v.
using FormIndex = std::uint8_t;

inline int index_degree(FormIndex i) { return std::popcount(unsigned(i)); }
std::string index_name(FormIndex i);
FormIndex index_from_name(const std::string& s);

// Sign of dx_I ∧ dx_J relative to dx_{I∪J}; 0 when I and J meet.
int merge_sign(FormIndex i, FormIndex j);

template <class Coeff>
bool coeff_is_zero(const Coeff& c) {
    if constexpr (std::is_same_v<Coeff, QPolynomial>) return c.is_zero();
    else return c.is_zero_q();
}

// Σ_I c_I dx_I with quaternion-like coefficients stored on the left.
template <class Coeff>
class HForm {
public:
    explicit HForm(int degree = 0) : degree_(degree) {
        if (degree < 0 || degree > 4) throw DegreeOverflow("form degree must be in 0..4");
    }

    int degree() const { return degree_; }
    const std::map<FormIndex, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(FormIndex i, const Coeff& c) {
        if (index_degree(i) != degree_) throw DegreeOverflow("index does not match form degree");
        auto it = terms_.find(i);
        if (it == terms_.end()) {
            if (!coeff_is_zero(c)) terms_.emplace(i, c);
            return;
        }
        it->second += c;
        if (coeff_is_zero(it->second)) terms_.erase(it);
    }
    Coeff coeff(FormIndex i) const {
        auto it = terms_.find(i);
        return it == terms_.end() ? Coeff() : it->second;
    }

    HForm& operator+=(const HForm& o) {
        check(o);
        for (const auto& [i, c] : o.terms_) add(i, c);
        return *this;
    }
    HForm& operator-=(const HForm& o) {
        check(o);
        for (const auto& [i, c] : o.terms_) add(i, -c);
        return *this;
    }
    friend HForm operator+(HForm a, const HForm& b) { return a += b; }
    friend HForm operator-(HForm a, const HForm& b) { return a -= b; }
    friend bool operator==(const HForm& a, const HForm& b) { return a.degree_ == b.degree_ && a.terms_ == b.terms_; }

    // p·ω and ω·p act on coefficients; dx_I are real and central.
    template <class P>
    HForm left(const P& p) const {
        HForm r(degree_);
        for (const auto& [i, c] : terms_) r.add(i, p * c);
        return r;
    }
    template <class P>
    HForm right(const P& p) const {
        HForm r(degree_);
        for (const auto& [i, c] : terms_) r.add(i, c * p);
        return r;
    }

    template <class F>
    auto map(F&& f) const {
        using Out = std::decay_t<decltype(f(std::declval<Coeff>()))>;
        HForm<Out> r(degree_);
        for (const auto& [i, c] : terms_) r.add(i, f(c));
        return r;
    }

private:
    void check(const HForm& o) const {
        if (o.degree_ != degree_) throw DegreeOverflow("adding forms of different degree");
    }
    int degree_;
    std::map<FormIndex, Coeff> terms_;
};

template <class Coeff>
HForm<Coeff> wedge(const HForm<Coeff>& a, const HForm<Coeff>& b) {
    if (a.degree() + b.degree() > 4) throw DegreeOverflow("wedge degree exceeds 4");
    HForm<Coeff> r(a.degree() + b.degree());
    for (const auto& [i, ca] : a.terms())
        for (const auto& [j, cb] : b.terms()) {
            const int s = merge_sign(i, j);
            if (s == 0) continue;
            Coeff p = ca * cb;
            r.add(FormIndex(i | j), s > 0 ? p : -p);
        }
    return r;
}

using PolyForm = HForm<QPolynomial>;
using PointForm = HForm<QDbl>;
using ConstForm = HForm<QRat>;

template <class Coeff>
HForm<Coeff> basis_form(FormIndex i, const Coeff& one) {
    HForm<Coeff> f(index_degree(i));
    f.add(i, one);
    return f;
}

// The distinguished constant forms.
ConstForm form_dq();
ConstForm form_dqbar();
ConstForm form_dqbar_dq();
ConstForm form_Dq();
ConstForm form_omega0();

PolyForm to_poly_form(const ConstForm& f);
PointForm to_point_form(const ConstForm& f);
PointForm evaluate(const PolyForm& f, const QDbl& q);

PolyForm exterior_d(const PolyForm& w);
// df for a function, as a 1-form.
PolyForm differential(const QPolynomial& f);

// Σ_I c_I det(v[I]) for real vectors given as quaternions.
QDbl evaluate_on(const PointForm& f, const std::vector<QDbl>& vecs);

// Polynomial self-map of R⁴ ≅ H given by a quaternion-valued polynomial.
PolyForm pullback(const QPolynomial& phi, const PolyForm& w);

// 4×4 Jacobian ∂φ_i/∂x_j of q ↦ γ·q by forward-mode differentiation.
std::array<std::array<double, 4>, 4> mobius_jacobian(const QMatDbl& g, const QDbl& q);

// Pointwise pullback of the form value w (taken at γ·q) through γ at q.
PointForm pullback_at(const std::array<std::array<double, 4>, 4>& jac, const PointForm& w_at_image);
PointForm mobius_pullback(const QMatDbl& g, const QDbl& q, const PointForm& constant_form);

enum class MobiusForm { dq, dqbar_dq, Dq };

// γ*(dq) = (ā+qb̄)⁻¹ dq (cq+d)⁻¹;
// γ*(dq̄∧dq) = N(cq+d)⁻¹ conj(cq+d)⁻¹ dq̄∧dq (cq+d)⁻¹;
// γ*(Dq) = (ā+qb̄)⁻¹ Dq (cq+d)⁻¹ |cq+d|⁻⁴.
PointForm mobius_pullback_closed_form(const QMatDbl& g, MobiusForm which, const QDbl& q);
// The dq̄∧dq formula without the N(cq+d)⁻¹ factor.
PointForm dqbar_dq_closed_form_without_norm(const QMatDbl& g, const QDbl& q);
// (ā+qb̄)′ Dq (cq+d)′.
PointForm Dq_closed_form_prime(const QMatDbl& g, const QDbl& q);

template <class Coeff>
double max_abs(const HForm<Coeff>& f) {
    double m = 0.0;
    for (const auto& [i, c] : f.terms()) m = std::max(m, max_abs(c));
    return m;
}

// Automorphic form matrices: entry (j, i) pairs g_j on the left with f_i on the right.
enum class AutoForm { eta, theta, omega };

using FormMatrix = std::vector<std::vector<PolyForm>>;
using PointFormMatrix = std::vector<std::vector<PointForm>>;
using VectorFunction = std::function<std::vector<QDbl>(const QDbl&)>;

// ω_{f,g} with entries g_j* Dq f_i, exact.
FormMatrix omega_forms(const std::vector<QPolynomial>& f, const std::vector<QPolynomial>& g);

// η = g* dq f/(1-Nq)², θ = ᵗḡ dq̄∧dq f/(1-Nq), ω = g* Dq f at a point.
PointFormMatrix automorphic_forms_at(const VectorFunction& f, const VectorFunction& g, AutoForm which,
                                     const QDbl& q);

// γ*Ξ - R_{n-1}(a+bq̄)* Ξ R_{n-1}(cq+d) at q; for θ the left factor uses cq+d.
double automorphic_transformation_residual(const VectorFunction& f, const VectorFunction& g, AutoForm which,
                                           const QMatDbl& gamma, const QDbl& q);

}  // namespace sp11
