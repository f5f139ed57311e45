#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sp11/errors.hpp"
#include "sp11/fueter.hpp"
#include "sp11/rep.hpp"
#include "sp11/suites.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sp11;

json gauss_json(const GaussRational& g) { return json::array({g.re.get_str(), g.im.get_str()}); }

json matrix_json(const Matrix<GaussRational>& m, BasisTag tag, const std::string& label) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(gauss_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"label", label}, {"basis_tag", to_string(tag)}, {"entries", std::move(rows)}};
}

json poly_json(const QPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exponent", {e[0], e[1], e[2], e[3]}},
                         {"coeff", {c.t.get_str(), c.x.get_str(), c.y.get_str(), c.z.get_str()}}});
    return terms;
}

json emit_matrices(const std::string& kind, int n) {
    json out = json::array();
    if (kind == "rn") {
        const char* names[] = {"R_n(1)", "R_n(i)", "R_n(j)", "R_n(k)"};
        for (int e = 0; e < 4; ++e)
            out.push_back(matrix_json(rn_matrix(QRat::basis(e), n), BasisTag::monomial_xfirst, names[e]));
    } else if (kind == "jn") {
        out.push_back(matrix_json(jn_solve(n), BasisTag::monomial_xfirst, "J_n"));
    } else {
        const QRat o = QRat::one(), z{}, i = QRat::i(), j = QRat::j();
        out.push_back(matrix_json(mu_matrix(QMatRat{j, z, z, j}, n), BasisTag::stacked, "mu(jI)"));
        out.push_back(matrix_json(mu_matrix(QMatRat{i, z, z, o}, n), BasisTag::stacked, "mu(diag(i, 1))"));
        out.push_back(matrix_json(mu_matrix(QMatRat{z, o, o, z}, n), BasisTag::stacked, "mu([[0, 1], [1, 0]])"));
    }
    return out;
}

json emit_family(const std::string& family, int n) {
    json out = json::array();
    if (family == "P") {
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l) out.push_back({{"k", k}, {"l", l}, {"terms", poly_json(p_kl(n, k, l))}});
    } else if (family == "Q") {
        for (int l = 0; l <= n; ++l)
            for (int k = 0; k <= l; ++k) out.push_back({{"k", k}, {"l", l}, {"terms", poly_json(q_kl(n, k, l))}});
    } else {
        if (n < 1) throw ConfigError("h_k^n needs n >= 1");
        for (int k = 0; k <= n; ++k) {
            json coords = json::array();
            for (const auto& c : minimal_ktype(n, k).h) coords.push_back(poly_json(c));
            out.push_back({{"k", k}, {"coordinates", std::move(coords)}});
        }
    }
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot open " + path);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification and basis tools for quaternionic analysis on Sp(1,1)"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string suite, emit = "json", out;
    double tol = 0.0;
    int samples = 0;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "lie, group, rep, fueter, forms, cauchy, level or all")->required();
    verify->add_option("--seed", cfg.seed, "PRNG seed");
    auto* tol_opt = verify->add_option("--tol", tol, "float tolerance for checks with the default 1e-10");
    auto* samples_opt = verify->add_option("--samples", samples, "sample count override");
    verify->add_option("--max-degree", cfg.max_degree, "largest polynomial degree in the fueter suite");
    verify->add_option("--level", cfg.level, "quadrature level");
    verify->add_option("--degree", cfg.degree, "degree of regular test polynomials in the cauchy suite");
    verify->add_option("--radius", cfg.radius, "sphere radius in the cauchy suite");
    verify->add_option("--N", cfg.N, "congruence level");
    verify->add_option("--height", cfg.height, "G(Z) search height");
    verify->add_option("--emit", emit, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out, "write the report to FILE");

    int n = 1;
    std::string basis_emit, family;
    auto* basis = app.add_subcommand("basis", "emit representation matrices or polynomial families as JSON");
    basis->add_option("--n", n, "degree")->required();
    auto* e_opt = basis->add_option("--emit", basis_emit, "rn, jn or mu")->check(CLI::IsMember({"rn", "jn", "mu"}));
    auto* f_opt = basis->add_option("--family", family, "P, Q or h")->check(CLI::IsMember({"P", "Q", "h"}));
    e_opt->excludes(f_opt);
    basis->add_option("--out", out, "write the output to FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            if (*tol_opt) cfg.tol = tol;
            if (*samples_opt) cfg.samples = samples;
            const VerifyReport report = run_suite(suite, cfg);
            write_output(emit == "json" ? report.to_json() : report.to_text(), out);
            return report.passed() ? 0 : 1;
        }
        if (n < 0 || n > 12) throw ConfigError("--n must be in 0..12");
        if (!*e_opt && !*f_opt) throw ConfigError("basis needs --emit or --family");
        const json j = *e_opt ? json{{"n", n}, {"kind", basis_emit}, {"matrices", emit_matrices(basis_emit, n)}}
                              : json{{"n", n}, {"family", family}, {"functions", emit_family(family, n)}};
        write_output(j.dump(2) + "\n", out);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
