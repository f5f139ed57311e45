#pragma once

#include <vector>

#include "sp11/arith.hpp"
#include "sp11/fueter.hpp"
#include "sp11/random.hpp"

namespace sp11 {

// Random polynomial of total degree ≤ deg with small rational coefficients.
QPolynomial random_polynomial(Rng& rng, int deg, bool complex_valued = false);

// Σ Q^n_{k,l} c_{k,l} with random right quaternion coefficients, 0 ≤ k ≤ l ≤ n.
QPolynomial random_regular(Rng& rng, int n);

VnFunction random_vn_function(Rng& rng, int n, int deg);

// g = diag(u₁,v₁) σ(p₁) diag(u₂,v₂) σ(p₂) for random units and ball points.
QMatDbl random_sp11(Rng& rng);
QMatDbl random_gl2h(Rng& rng);
QMatDbl random_complex_or_j_matrix(Rng& rng, bool j_part);
// Sp(1,1) elements with all entries in C, or all in ĵC when j_part is set.
QMatDbl random_sp11_complex(Rng& rng, bool j_part);

// (1+v)(1-v)⁻¹ for a random rational imaginary v: an exact unit quaternion.
QRat rational_unit(Rng& rng);

GaussRational random_gauss(Rng& rng);
Matrix2<GaussRational> random_gauss_matrix(Rng& rng);

// The G(Z) elements of height ≤ 4, searched once.
const std::vector<IntegralGroupElement>& gz_sample_pool();

}  // namespace sp11
