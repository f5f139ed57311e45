#include "sp11/rep.hpp"

namespace sp11 {

Matrix<GaussRational> jn_solve(int n) {
    using G = GaussRational;
    const std::size_t m = std::size_t(n + 1);
    const std::vector<QRat> gens{QRat::i(), QRat::j(),
                                 QRat(Rational(1, 5), Rational(2, 5), Rational(2, 5), Rational(4, 5))};
    // Unknown J(c, d) sits at column c*m + d; equation (a, b) of generator k at
    // row k*m*m + a*m + b reads Σ R(c,a) J(c,d) conj(R(d,b)) - J(a,b) = 0.
    Matrix<G> sys(gens.size() * m * m, m * m);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const Matrix<G> r = rn_matrix(gens[k], n);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                const std::size_t row = k * m * m + a * m + b;
                for (std::size_t c = 0; c < m; ++c)
                    for (std::size_t d = 0; d < m; ++d) sys(row, c * m + d) += r(c, a) * cconj(r(d, b));
                sys(row, a * m + b) -= G(1);
            }
    }
    const Matrix<G> ns = nullspace(sys);
    if (ns.cols() != 1)
        throw SolverDegenerate("invariance system has solution space of dimension " + std::to_string(ns.cols()));
    Matrix<G> j(m, m);
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = 0; d < m; ++d) j(c, d) = ns(c * m + d, 0);
    if (is_zero(j(0, 0))) throw SolverDegenerate("J(0,0) vanishes; cannot normalise");
    const G s = G(1) / j(0, 0);
    return s * j;
}

}  // namespace sp11
