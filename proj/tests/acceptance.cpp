// Acceptance criteria 1-8. Prints one PASS/FAIL line per criterion, preceded
// by the contributing checks. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sp11/lie.hpp"
#include "sp11/suites.hpp"

namespace {

using namespace sp11;
using Clock = std::chrono::steady_clock;

struct Criterion {
    int number;
    std::string title;
    std::string suite;
    std::vector<std::string> required;
    std::vector<std::string> supplementary;  // reported, not counted
    double time_limit = 0.0;                 // seconds, 0 for none
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {1, "Killing matrices of su(2) and sp(1,1)", "lie", {"lie.killing_su2", "lie.killing_sp11"}, {}, 1.0},
        {2, "root vector normalizations", "lie", {"lie.root_killing_normalization", "lie.root_bracket_cartan"}, {}},
        {3, "group geometry", "group", {"group.ngamma_identity", "group.sigma_inverse", "group.j_cocycle"}, {}},
        {4, "Fueter core", "fueter", {"fueter.crf", "fueter.q_regular", "fueter.h_regular", "fueter.dirac_diagram"}, {}},
        {5, "forms", "forms",
         {"forms.d_gDqf", "forms.omega_closed", "forms.formdform_a", "forms.formdform_b", "forms.formdform_c"},
         {"forms.d_gDqf_plus_sign", "forms.formdform_b_normalized"}},
        {6, "representations", "rep",
         {"rep.rn_hom_exact", "rep.rn_hom_float", "rep.mu_hom", "rep.jn_invariance", "rep.z_relation"},
         {"rep.mu_hom_low_degree", "rep.mu_hom_complex_or_j", "rep.z_relation_low_degree",
          "rep.z_relation_complex_or_j"}},
        {7, "quadrature", "cauchy", {"cauchy.reproduction", "cauchy.dq_f_vanishes"}, {}, 60.0},
        {8, "arithmetic level structure", "level", {"level.gamma_n_agreement"}, {}},
    };
    return list;
}

void print_check(const char* tag, const Check* c, const std::string& id) {
    if (!c) {
        std::cout << "  " << tag << " " << id << " missing\n";
        return;
    }
    std::cout << "  " << tag << " " << (c->pass ? "ok  " : "bad ") << c->id << " residual=" << c->residual;
    if (c->mode == CheckMode::floating) std::cout << " tol=" << c->tol;
    std::cout << "\n";
}

// Killing matrices are timed on their own, from structure constants.
bool killing_timing(double& seconds) {
    const auto t0 = Clock::now();
    const Matrix<Rational> su2 = killing_matrix(Algebra::su2), sp11 = killing_matrix(Algebra::sp11);
    seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    bool ok = su2.rows() == 3 && sp11.rows() == 10;
    for (std::size_t i = 0; ok && i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ok = ok && su2(i, j) == Rational(i == j ? -8 : 0);
    for (std::size_t i = 0; ok && i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) ok = ok && sp11(i, j) == Rational(i != j ? 0 : i < 6 ? -12 : 24);
    return ok;
}

bool run(const Criterion& c, std::map<std::string, VerifyReport>& cache) {
    SuiteConfig cfg;  // seed 7, max degree 5, level 5, degree 4, N = 2, height 4
    const auto t0 = Clock::now();
    auto it = cache.find(c.suite);
    if (it == cache.end()) it = cache.emplace(c.suite, run_suite(c.suite, cfg)).first;
    const double suite_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    const VerifyReport& report = it->second;

    bool ok = true;
    for (const auto& id : c.required) {
        const Check* k = report.find(id);
        print_check("req ", k, id);
        ok = ok && k && k->pass;
    }
    for (const auto& id : c.supplementary) print_check("info", report.find(id), id);

    std::string timing;
    if (c.number == 1) {
        double s = 0.0;
        const bool exact = killing_timing(s);
        ok = ok && exact && s < c.time_limit;
        timing = " killing_seconds=" + std::to_string(s) + " limit=" + std::to_string(c.time_limit);
    } else if (c.time_limit > 0.0) {
        ok = ok && suite_seconds < c.time_limit;
        timing = " suite_seconds=" + std::to_string(suite_seconds) + " limit=" + std::to_string(c.time_limit);
    }
    std::cout << (ok ? "PASS" : "FAIL") << " C" << c.number << " " << c.title << timing << "\n";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int which = 0;
    app.add_option("--criterion", which, "criterion 1-8, 0 for all")->check(CLI::Range(0, 8));
    CLI11_PARSE(app, argc, argv);

    std::map<std::string, VerifyReport> cache;
    bool all = true;
    try {
        for (const auto& c : criteria())
            if (which == 0 || which == c.number) all = run(c, cache) && all;
    } catch (const Error& e) {
        std::cout << "FAIL C" << which << " error: " << e.what() << "\n";
        return 1;
    }
    return all ? 0 : 1;
}
