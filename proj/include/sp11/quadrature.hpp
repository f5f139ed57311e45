#pragma once

#include <array>
#include <functional>
#include <vector>

#include "sp11/forms.hpp"
#include "sp11/qpoly.hpp"

namespace sp11 {

struct GaussLegendre {
    std::vector<double> nodes, weights;  // on [-1, 1]
};
GaussLegendre gauss_legendre(int n);

struct SphereNode {
    QDbl point;
    double weight;
    std::array<QDbl, 3> frame;  // orthonormal, ω₀(normal, frame) > 0
    QDbl normal;
};

struct SphereRule {
    QDbl center;
    double radius;
    std::vector<SphereNode> nodes;
};

struct SphereCounts {
    int chi, theta, phi;
};
SphereCounts sphere_counts(int level);

// Product rule in hyperspherical angles: Gauss–Legendre in χ and θ, midpoint in φ.
SphereRule sphere_rule(const QDbl& center, double radius, int level);

// Sum that does not depend on summation order beyond the fixed tree shape.
QDbl pairwise_sum(const std::vector<QDbl>& v);

using FrameIntegrand = std::function<QDbl(const QDbl& point, const std::array<QDbl, 3>& frame)>;

QDbl integrate_3form(const FrameIntegrand& w, const SphereRule& rule);
QDbl integrate_3form(const std::function<PointForm(const QDbl&)>& w, const SphereRule& rule);

// G(q) = q⁻¹ / N q.
QDbl cauchy_kernel(const QDbl& q);

// (1/2π²) ∫ G(q - q₀) Dq f(q) over S³_r(q₀).
QDbl cauchy_fueter_value(const QPolynomial& f, const QDbl& q0, double radius, int level);

// (1/2π²) ∫ P(q - q₀) Dq f(q) over the rule's sphere.
QDbl laurent_b(const QPolynomial& f, const QPolynomial& p, const SphereRule& rule);

struct BoxRule {
    std::array<double, 4> corner, extents;
    int nodes_per_axis;
};

struct StokesResult {
    QDbl boundary, interior;
    QDbl residual() const { return boundary - interior; }
};

StokesResult stokes_residual(const PolyForm& w, const BoxRule& box);

}  // namespace sp11
