#include <array>

#include "sp11/lie.hpp"
#include "sp11/rep.hpp"
#include "sp11/samples.hpp"
#include "suite_util.hpp"

namespace sp11::detail {

namespace {

nlohmann::ordered_json rational_matrix_json(const Matrix<Rational>& m) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class C>
double lie_residual(const LieVec<C>& v) {
    double r = 0.0;
    for (const auto& x : v.c) r = std::max(r, magnitude(x));
    return r;
}

LieVector random_lie(Rng& rng) {
    LieVector v;
    for (auto& x : v.c) x = rng.rational(8, Rational(2));
    return v;
}

double gauss_residual(const GaussRational& a, const GaussRational& b) { return magnitude(a - b); }

template <class C>
VPolynomial<C> apply(const Matrix<C>& m, const VPolynomial<C>& f) {
    VPolynomial<C> r = VPolynomial<C>::zero(f.degree());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.c[i] += m(i, j) * f.c[j];
    return r;
}

template <class C>
double vpoly_residual(const VPolynomial<C>& a, const VPolynomial<C>& b) {
    double r = 0.0;
    for (std::size_t i = 0; i < a.c.size(); ++i) r = std::max(r, magnitude(a.c[i] - b.c[i]));
    return r;
}

VPolynomial<GaussRational> random_vpoly(Rng& rng, int n) {
    auto f = VPolynomial<GaussRational>::zero(n);
    for (auto& c : f.c) c = random_gauss(rng);
    return f;
}

// (ᵗg)⁻¹ (a, b).
std::array<GaussRational, 2> dual_act(const Matrix2<GaussRational>& g, const GaussRational& a,
                                      const GaussRational& b) {
    const GaussRational det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    return {(g[1][1] * a - g[1][0] * b) / det, (g[0][0] * b - g[0][1] * a) / det};
}

QMatRat complex_qmatrix(const Matrix2<GaussRational>& g) {
    const GaussRational z(0);
    return {join_zjw(g[0][0], z), join_zjw(g[0][1], z), join_zjw(g[1][0], z), join_zjw(g[1][1], z)};
}

}  // namespace

void run_lie(SuiteContext& ctx) {
    auto& rng = ctx.rng;
    const Matrix<Rational> ks = killing_matrix(Algebra::su2);
    const Matrix<Rational> kg = killing_matrix(Algebra::sp11);
    Matrix<Rational> es(3, 3), eg(kLieDim, kLieDim);
    for (std::size_t i = 0; i < 3; ++i) es(i, i) = -8;
    for (std::size_t i = 0; i < kLieDim; ++i) eg(i, i) = i < 6 ? -12 : 24;
    ctx.exact("lie.killing_su2", "Killing form of su(2) in the basis i, j, k equals -8 I3", max_abs(ks - es));
    ctx.exact("lie.killing_sp11", "Killing form of sp(1,1) in the basis S1 u S2 equals diag(-12 I6, 24 I4)",
              max_abs(kg - eg));
    ctx.report.data["killing_su2"] = rational_matrix_json(ks);
    ctx.report.data["killing_sp11"] = rational_matrix_json(kg);

    double r = 0.0;
    for (int s = 0; s < ctx.samples(50); ++s) {
        const Rational a = rng.rational(16, Rational(3)), b = rng.rational(16, Rational(3)),
                       c = rng.rational(16, Rational(3));
        Matrix<Rational> disp(3, 3);
        disp(0, 1) = -2 * c;
        disp(0, 2) = 2 * b;
        disp(1, 0) = 2 * c;
        disp(1, 2) = -2 * a;
        disp(2, 0) = -2 * b;
        disp(2, 1) = 2 * a;
        worst(r, max_abs(su2_ad_matrix({a, b, c}) - disp));
    }
    ctx.exact("lie.su2_adjoint_display", "ad(ai + bj + ck) is the antisymmetric matrix with entries 2a, 2b, 2c", r);

    r = 0.0;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 6; j < kLieDim; ++j)
            worst(r, magnitude(killing(basis_vector<Rational>(i), basis_vector<Rational>(j))));
    ctx.exact("lie.killing_k_p_orthogonal", "B(X, Y) = 0 for X in k0 and Y in p0", r);

    r = 0.0;
    for (int s = 0; s < ctx.samples(30); ++s) {
        const LieVector x = random_lie(rng), y = random_lie(rng);
        const auto ax = ad_matrix(x), ay = ad_matrix(y);
        worst(r, max_abs(ad_matrix(bracket(x, y)) - (ax * ay - ay * ax)));
    }
    ctx.exact("lie.ad_derivation", "ad[X, Y] = [ad X, ad Y]", r);

    r = 0.0;
    const GaussRational one(1), zero(0);
    for (const auto& mu : roots()) {
        worst(r, lie_residual(root_equation_defect(mu, one, zero)));
        worst(r, lie_residual(root_equation_defect(mu, zero, one)));
    }
    ctx.exact("lie.root_space", "[H, E_mu] = mu(H) E_mu for both Cartan generators and all 8 roots", r);

    r = 0.0;
    for (const auto& mu : roots())
        for (const auto& nu : roots()) {
            const auto b = killing_root(root_vector(mu), root_vector(-nu));
            const GaussRational expect = mu == nu ? one : zero;
            worst(r, b ? gauss_residual(*b, expect) : 1.0);
        }
    ctx.exact("lie.root_killing_normalization", "B(E_mu, E_-nu) = delta_mu,nu over all pairs of roots", r);

    r = 0.0;
    for (const auto& mu : roots())
        worst(r, lie_residual(bracket_root(root_vector(mu), root_vector(-mu)) - cartan_element(mu)));
    ctx.exact("lie.root_bracket_cartan", "[E_mu, E_-mu] = H_mu for all 8 roots", r);

    const auto t = sl2_triple_map();
    const auto ie = iota(t.e), iff = iota(t.f), ih = iota(t.h);
    r = 0.0;
    const std::array<std::array<GaussRational, 4>, 3> want{{{zero, one, zero, zero},
                                                            {zero, zero, one, zero},
                                                            {one, zero, zero, GaussRational(-1)}}};
    const std::array<Matrix2<GaussRational>, 3> got{ie, iff, ih};
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t e = 0; e < 4; ++e) worst(r, gauss_residual(got[k][e / 2][e % 2], want[k][e]));
    ctx.exact("lie.sl2_triple", "iota maps (e, f, h) to the standard sl2 triple (X, Y, H)", r);
}

void run_group(SuiteContext& ctx) {
    auto& rng = ctx.rng;
    // î² = ĵ² = k̂² = îĵk̂ = -1 gives the table below (sign, index).
    static constexpr int table[4][4][2] = {{{1, 0}, {1, 1}, {1, 2}, {1, 3}},
                                           {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
                                           {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
                                           {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
    double r = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const QRat expect = Rational(table[a][b][0]) * QRat::basis(table[a][b][1]);
            worst(r, max_abs(QRat::basis(a) * QRat::basis(b) - expect));
        }
    ctx.exact("group.quat_mul_table", "basis products follow i^2 = j^2 = k^2 = ijk = -1", r);

    r = 0.0;
    for (int s = 0; s < ctx.samples(1000); ++s) {
        const QRat p = rng.rational_quaternion(), q = rng.rational_quaternion();
        worst(r, max_abs((p * q).conj() - q.conj() * p.conj()));
    }
    ctx.exact("group.quat_conj_antiinvolution", "conj(pq) = conj(q) conj(p)", r);

    Matrix<Rational> im(8, 4);
    for (int e = 0; e < 4; ++e) {
        const auto m = iota(QRat::basis(e));
        for (std::size_t k = 0; k < 4; ++k) {
            im(2 * k, std::size_t(e)) = m[k / 2][k % 2].re;
            im(2 * k + 1, std::size_t(e)) = m[k / 2][k % 2].im;
        }
    }
    ctx.exact("group.iota_injective", "iota(1), iota(i), iota(j), iota(k) are linearly independent over R",
              double(4 - rank(im)));

    r = 0.0;
    for (int s = 0; s < ctx.samples(200); ++s) {
        const QRat q = rng.rational_quaternion();
        const auto m = iota(q);
        const GaussRational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        worst(r, gauss_residual(det, GaussRational(q.norm())));
        worst(r, gauss_residual(m[0][0] + m[1][1], GaussRational(q.trace())));
    }
    ctx.exact("group.iota_det_trace", "det iota(q) = N q and tr iota(q) = T q", r);

    const auto& pool = gz_sample_pool();
    auto pick = [&]() -> const QMatRat& { return pool[std::size_t(rng.uniform_int(0, long(pool.size()) - 1))].matrix(); };
    const int n_points = ctx.samples(200);

    r = 0.0;
    double ng = 0.0;
    for (int s = 0; s < n_points; ++s) {
        const QMatRat& g1 = pick();
        const QMatRat& g2 = pick();
        const QRat q = rng.ball_point();
        worst(r, max_abs(mobius_act(g1 * g2, q) - mobius_act(g1, mobius_act(g2, q))));
        worst(ng, magnitude(one_minus_norm_factor(g1, q)));
    }
    ctx.exact("group.action_property", "(g1 g2).q = g1.(g2.q) for g1, g2 in G(Z) and rational q in B", r);
    ctx.exact("group.ngamma_identity", "1 - N(g.q) = (1 - N q) / N(cq + d) for g in G(Z) and rational q in B", ng);

    r = 0.0;
    double mem = 0.0;
    for (int s = 0; s < n_points; ++s) {
        const QRat q = rng.ball_point();
        const QRat mq = -q;
        const auto p = sigma(q) * sigma(mq);
        const Rational sc = Rational(1) - q.norm();
        worst(r, max_abs(p.m - sc * QMatRat::identity()));
        worst(r, magnitude(Rational(p.scale_sq - sc * sc)));
        worst(mem, max_abs(sp11_defect(sigma(q))));
    }
    ctx.exact("group.sigma_inverse", "sigma(q)^-1 = sigma(-q) with the scalar prefactor tracked exactly", r);
    ctx.exact("group.sigma_membership", "sigma(q) lies in Sp(1,1)", mem);

    double coc = 0.0, unit = 0.0, fac = 0.0;
    for (int s = 0; s < ctx.samples(200); ++s) {
        const QMatDbl g1 = random_sp11(rng), g2 = random_sp11(rng);
        const QDbl q = rng.ball_point_double();
        const auto j12 = as_matrix(j_factor(g1 * g2, q));
        const auto chained = as_matrix(j_factor(g1, mobius_act(g2, q))) * as_matrix(j_factor(g2, q));
        worst(coc, max_abs(j12 - chained));
        const KFactor k = j_factor(g1, q);
        worst(unit, std::max(std::abs(k.u_left.norm() - 1.0), std::abs(k.u_right.norm() - 1.0)));
        worst(fac, max_abs(g1 * sigma_value(q) - sigma_value(mobius_act(g1, q)) * as_matrix(k)));
    }
    ctx.floating("group.j_cocycle", "j(g1 g2, q) = j(g1, g2.q) j(g2, q)", coc);
    ctx.floating("group.j_unit_norm", "both diagonal entries of j(g, q) have unit norm", unit, 1e-12);
    ctx.floating("group.j_factorization", "g sigma(q) = sigma(g.q) j(g, q)", fac);

    r = 0.0;
    for (int s = 0; s < ctx.samples(200); ++s) {
        const QMatRat& g1 = pick();
        const QMatRat& g2 = pick();
        worst(r, max_abs(dagger(g1 * g2) - dagger(g1) * dagger(g2)));
        worst(r, max_abs(dagger(dagger(g1)) - g1));
        worst(r, max_abs(dagger(g1 + g2) - (dagger(g1) + dagger(g2))));
    }
    ctx.exact("group.dagger_automorphism", "the dagger is an involutive ring automorphism of M2(H)", r);
}

void run_rep(SuiteContext& ctx) {
    auto& rng = ctx.rng;
    constexpr int kMaxN = 4;

    double r = 0.0;
    for (int n = 0; n <= kMaxN; ++n)
        for (int s = 0; s < ctx.samples(20); ++s) {
            const auto g = random_gauss_matrix(rng), h = random_gauss_matrix(rng);
            worst(r, max_abs(rn_matrix(g * h, n) - rn_matrix(g, n) * rn_matrix(h, n)));
        }
    ctx.exact("rep.rn_hom_exact", "R_n(gh) = R_n(g) R_n(h) over the Gaussian rationals, n <= 4", r);

    r = 0.0;
    auto cu = [&] { return Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)); };
    for (int s = 0; s < ctx.samples(200); ++s) {
        const Matrix2<Complex> g{{{cu(), cu()}, {cu(), cu()}}}, h{{{cu(), cu()}, {cu(), cu()}}};
        for (int n = 0; n <= kMaxN; ++n)
            worst(r, max_abs(rn_matrix(g * h, n) - rn_matrix(g, n) * rn_matrix(h, n)));
    }
    ctx.floating("rep.rn_hom_float", "R_n(gh) = R_n(g) R_n(h) in floating point, n <= 4", r);

    r = 0.0;
    double dual = 0.0;
    for (int s = 0; s < ctx.samples(100); ++s) {
        const QRat u = rng.rational_quaternion();
        const GaussRational a = random_gauss(rng), b = random_gauss(rng);
        const auto g = iota(u);
        const QRat lhs = v1_to_h(GaussRational(g[0][0] * a + g[0][1] * b), GaussRational(g[1][0] * a + g[1][1] * b));
        worst(r, max_abs(lhs - u * v1_to_h(a, b)));

        const auto gu = iota(rational_unit(rng));
        const auto d = dual_act(gu, a, b);
        const auto l = v1dual_to_v1(d[0], d[1]);
        const auto v = v1dual_to_v1(a, b);
        worst(dual, gauss_residual(l[0], gu[0][0] * v[0] + gu[0][1] * v[1]));
        worst(dual, gauss_residual(l[1], gu[1][0] * v[0] + gu[1][1] * v[1]));
    }
    ctx.exact("rep.v1h_intertwiner", "aX + bY -> a - jb carries the action of iota(u) to left multiplication by u", r);
    ctx.exact("rep.v1dual_intertwiner", "aX* + bY* -> bX - aY intertwines the dual action of unit quaternions", dual);

    r = 0.0;
    for (int k = 1; k <= 6; ++k) {
        const std::size_t dim = std::size_t(2 * k + 2);
        Matrix<Rational> m(dim, dim);
        std::size_t col = 0;
        for (int which = 0; which < 2; ++which)
            for (int i = 0; i <= k; ++i, ++col) {
                const Rational a = which == 0 ? 1 : 0, b = which == 0 ? 0 : 1;
                const auto f = VPolynomial<Rational>::monomial(k, i);
                const auto pp = p_plus(a, b, f), pm = p_minus(a, b, f);
                for (std::size_t t = 0; t < pp.c.size(); ++t) m(t, col) = pp.c[t];
                for (std::size_t t = 0; t < pm.c.size(); ++t) m(pp.c.size() + t, col) = pm.c[t];
            }
        r += double(dim - rank(m));
    }
    ctx.exact("rep.p_pm_injective", "P+ (+) P- is injective on V1* (x) V_k for 1 <= k <= 6", r);

    double rm = 0.0, rp = 0.0;
    for (int s = 0; s < ctx.samples(40); ++s) {
        const int k = int(rng.uniform_int(1, kMaxN));
        const auto f = random_vpoly(rng, k);
        const GaussRational a = random_gauss(rng), b = random_gauss(rng);
        auto g = random_gauss_matrix(rng);
        if (is_zero(GaussRational(g[0][0] * g[1][1] - g[0][1] * g[1][0]))) continue;
        auto d = dual_act(g, a, b);
        worst(rm, vpoly_residual(p_minus(d[0], d[1], apply(rho_matrix(g, k), f)),
                                 apply(rho_matrix(g, k - 1), p_minus(a, b, f))));
        if (is_zero(g[0][0])) g[0][0] = GaussRational(1);
        g[1][1] = (GaussRational(1) + g[0][1] * g[1][0]) / g[0][0];
        d = dual_act(g, a, b);
        worst(rp, vpoly_residual(p_plus(d[0], d[1], apply(rho_matrix(g, k), f)),
                                 apply(rho_matrix(g, k + 1), p_plus(a, b, f))));
    }
    ctx.exact("rep.p_minus_equivariant", "P- commutes with the GL2 action on V1* (x) V_k", rm);
    ctx.exact("rep.p_plus_equivariant", "P+ commutes with the SL2 action on V1* (x) V_k", rp);

    std::vector<Matrix<GaussRational>> js;
    r = 0.0;
    for (int n = 0; n <= kMaxN; ++n) {
        js.push_back(jn_solve(n));
        worst(r, max_abs(js.back() - js.back().adjoint()));
    }
    ctx.exact("rep.jn_hermitian", "J_n is Hermitian", r);
    r = 0.0;
    for (int s = 0; s < ctx.samples(100); ++s) {
        const QDbl u = rng.unit_quaternion();
        for (int n = 0; n <= kMaxN; ++n) worst(r, max_abs(jn_defect(js[std::size_t(n)], u, n)));
    }
    ctx.floating("rep.jn_invariance", "tR_n(u) J_n conj(R_n(u)) = J_n at random unit quaternions, n <= 4", r);

    r = 0.0;
    for (int s = 0; s < ctx.samples(20); ++s) {
        const auto g = random_gauss_matrix(rng);
        for (int n = 1; n <= kMaxN; ++n) {
            const auto mu = mu_matrix(complex_qmatrix(g), n);
            const std::size_t m = std::size_t(n + 1);
            Matrix<GaussRational> expect(2 * m, 2 * m);
            expect.set_block(0, 0, rn_matrix(g, n));
            expect.set_block(m, m, rn_matrix(g, n).conj());
            worst(r, max_abs(mu - expect));
        }
    }
    ctx.exact("rep.mu_complex_block_diagonal", "mu(g) is block diagonal with blocks R_n(g), conj R_n(g) for g in M2(C)", r);

    double all = 0.0, low = 0.0, cj = 0.0;
    for (int s = 0; s < ctx.samples(100); ++s) {
        const QMatDbl g = random_gl2h(rng), h = random_gl2h(rng);
        const QMatDbl gc = random_complex_or_j_matrix(rng, rng.uniform_int(0, 1) == 1);
        const QMatDbl hc = random_complex_or_j_matrix(rng, rng.uniform_int(0, 1) == 1);
        for (int n = 1; n <= kMaxN; ++n) {
            const double e = max_abs(mu_matrix(g * h, n) - mu_matrix(g, n) * mu_matrix(h, n));
            worst(all, e);
            if (n == 1) worst(low, e);
            worst(cj, max_abs(mu_matrix(gc * hc, n) - mu_matrix(gc, n) * mu_matrix(hc, n)));
        }
    }
    ctx.floating("rep.mu_hom", "mu(gh) = mu(g) mu(h) on GL2(H), 1 <= n <= 4", all);
    ctx.floating("rep.mu_hom_low_degree", "mu(gh) = mu(g) mu(h) on GL2(H), n = 1", low);
    ctx.floating("rep.mu_hom_complex_or_j", "mu(gh) = mu(g) mu(h) for g, h in M2(C) u jM2(C), 1 <= n <= 4", cj);

    all = low = cj = 0.0;
    for (int s = 0; s < ctx.samples(100); ++s) {
        const QMatDbl g = random_sp11(rng);
        const QMatDbl gc = random_sp11_complex(rng, rng.uniform_int(0, 1) == 1);
        const QDbl q = rng.ball_point_double();
        for (int n = 1; n <= kMaxN; ++n) {
            const double e = max_abs(z_relation_defect(g, q, n));
            worst(all, e);
            if (n == 1) worst(low, e);
            worst(cj, max_abs(z_relation_defect(gc, q, n)));
        }
    }
    ctx.floating("rep.z_relation", "Z(g.q) R_n(cq + d) = mu(g) Z(q) on Sp(1,1), 1 <= n <= 4", all, 1e-9);
    ctx.floating("rep.z_relation_low_degree", "Z(g.q) R_n(cq + d) = mu(g) Z(q) on Sp(1,1), n = 1", low, 1e-9);
    ctx.floating("rep.z_relation_complex_or_j",
                 "Z(g.q) R_n(cq + d) = mu(g) Z(q) for g in Sp(1,1) with entries all in C or all in jC, 1 <= n <= 4", cj,
                 1e-9);
}

}  // namespace sp11::detail
