#include <map>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sp11/arith.hpp"
#include "sp11/fueter.hpp"
#include "sp11/lie.hpp"
#include "sp11/quadrature.hpp"
#include "sp11/rep.hpp"
#include "sp11/suites.hpp"

namespace py = pybind11;
using namespace sp11;

namespace {

using Quat = std::array<double, 4>;
using QuatMatrix = std::array<Quat, 4>;  // a, b, c, d
using StrMatrix = std::vector<std::vector<std::string>>;
using CMatrix = std::vector<std::vector<Complex>>;

QDbl to_q(const Quat& v) { return {v[0], v[1], v[2], v[3]}; }
Quat from_q(const QDbl& q) { return {q.t, q.x, q.y, q.z}; }
QMatDbl to_g(const QuatMatrix& m) { return {to_q(m[0]), to_q(m[1]), to_q(m[2]), to_q(m[3])}; }
QuatMatrix from_g(const QMatDbl& g) { return {from_q(g.a), from_q(g.b), from_q(g.c), from_q(g.d)}; }

template <class T, class F>
auto convert(const Matrix<T>& m, F&& f) {
    std::vector<std::vector<std::decay_t<decltype(f(m(0, 0)))>>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(f(m(i, j)));
    return out;
}

CMatrix complex_rows(const Matrix<Complex>& m) {
    return convert(m, [](const Complex& c) { return c; });
}

std::vector<std::string> rat_strings(const QRat& q) {
    return {q.t.get_str(), q.x.get_str(), q.y.get_str(), q.z.get_str()};
}

std::vector<std::pair<std::array<int, 4>, std::vector<std::string>>> poly_terms(const QPolynomial& p) {
    std::vector<std::pair<std::array<int, 4>, std::vector<std::string>>> out;
    for (const auto& [e, c] : p.terms()) out.push_back({{e[0], e[1], e[2], e[3]}, rat_strings(c)});
    return out;
}

std::string verify_json(const std::string& suite, std::uint64_t seed, std::optional<int> samples,
                        std::optional<double> tol, int max_degree, int level, int degree, double radius, long N,
                        long height) {
    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.tol = tol;
    cfg.max_degree = max_degree;
    cfg.level = level;
    cfg.degree = degree;
    cfg.radius = radius;
    cfg.N = N;
    cfg.height = height;
    return run_suite(suite, cfg).to_json();
}

}  // namespace

PYBIND11_MODULE(_sp11, m) {
    m.doc() = "Quaternionic analysis on Sp(1,1): exact algebra and numerical checks";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def("suite_names", &suite_names);
    m.def("verify_json", &verify_json, py::arg("suite"), py::arg("seed") = 7, py::arg("samples") = py::none(),
          py::arg("tol") = py::none(), py::arg("max_degree") = 5, py::arg("level") = 5, py::arg("degree") = 4,
          py::arg("radius") = 0.5, py::arg("N") = 2, py::arg("height") = 4,
          py::call_guard<py::gil_scoped_release>());

    m.def("killing_matrix", [](const std::string& alg) -> StrMatrix {
        if (alg != "su2" && alg != "sp11") throw ConfigError("algebra must be su2 or sp11");
        return convert(killing_matrix(alg == "su2" ? Algebra::su2 : Algebra::sp11),
                       [](const Rational& r) { return r.get_str(); });
    });

    m.def("qmul", [](const Quat& p, const Quat& q) { return from_q(to_q(p) * to_q(q)); });
    m.def("mobius", [](const QuatMatrix& g, const Quat& q) { return from_q(mobius_act(to_g(g), to_q(q))); });
    m.def("sigma", [](const Quat& q) { return from_g(sigma_value(to_q(q))); });
    m.def("is_sp11", [](const QuatMatrix& g) { return is_sp11(to_g(g)); });
    m.def("j_factor", [](const QuatMatrix& g, const Quat& q) {
        const KFactor k = j_factor(to_g(g), to_q(q));
        return std::make_pair(from_q(k.u_left), from_q(k.u_right));
    });

    m.def("rn", [](const Quat& u, int n) { return complex_rows(rn_matrix(to_q(u), n)); }, py::arg("u"), py::arg("n"));
    m.def("mu", [](const QuatMatrix& g, int n) { return complex_rows(mu_matrix(to_g(g), n)); });
    m.def("z_matrix", [](const Quat& q, int n) { return complex_rows(z_matrix(to_q(q), n)); });
    m.def("jn", [](int n) {
        return convert(jn_solve(n), [](const GaussRational& g) { return std::make_pair(g.re.get_str(), g.im.get_str()); });
    });

    m.def("p_kl", [](int n, int k, int l) { return poly_terms(p_kl(n, k, l)); });
    m.def("q_kl", [](int n, int k, int l) { return poly_terms(q_kl(n, k, l)); });
    m.def("q_kl_is_regular", [](int n, int k, int l) {
        return fueter_apply(q_kl(n, k, l), FueterOp::dl_bar).is_zero();
    });

    m.def("gauss_legendre", [](int n) {
        const auto gl = gauss_legendre(n);
        return std::make_pair(gl.nodes, gl.weights);
    });
    m.def("cauchy_kernel", [](const Quat& q) { return from_q(cauchy_kernel(to_q(q))); });
    m.def("cauchy_reproduce_q_kl", [](int n, int k, int l, const Quat& q0, double radius, int level) {
        return from_q(cauchy_fueter_value(q_kl(n, k, l), to_q(q0), radius, level));
    });

    m.def("hurwitz_of_norm", [](long n) {
        std::vector<std::vector<std::string>> out;
        for (const auto& q : hurwitz_of_norm(n)) out.push_back(rat_strings(q));
        return out;
    });
    m.def("gamma_n_counts", [](long height, long N) {
        const auto found = search_gz(height);
        std::size_t in = 0, agree = 0;
        for (const auto& g : found) {
            const bool a = gammaN_membership(g, Level(N)), b = gammaN_by_reduction(g, Level(N));
            in += a;
            agree += a == b;
        }
        return std::map<std::string, std::size_t>{{"found", found.size()}, {"in_gamma_N", in}, {"agree", agree}};
    }, py::call_guard<py::gil_scoped_release>());
}
