#pragma once

#include <algorithm>
#include <functional>
#include <string>

#include "sp11/random.hpp"
#include "sp11/report.hpp"
#include "sp11/suites.hpp"

namespace sp11::detail {

struct SuiteContext {
    const SuiteConfig& cfg;
    Rng rng;
    VerifyReport& report;

    int samples(int fallback) const { return cfg.samples.value_or(fallback); }
    double tol(double pinned = kDefaultTol) const { return pinned == kDefaultTol ? cfg.tol.value_or(pinned) : pinned; }

    void exact(std::string id, std::string statement, double residual) {
        report.checks.push_back(exact_check(std::move(id), std::move(statement), residual));
    }
    void floating(std::string id, std::string statement, double residual, double pinned = kDefaultTol) {
        report.checks.push_back(float_check(std::move(id), std::move(statement), residual, tol(pinned)));
    }
};

// Each suite draws from its own stream so `all` matches the single-suite runs.
inline std::uint64_t suite_seed(std::uint64_t seed, const std::string& name) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : name) h = (h ^ std::uint64_t(static_cast<unsigned char>(c))) * 1099511628211ull;
    return seed ^ h;
}

inline void worst(double& acc, double v) { acc = std::max(acc, v); }

void run_lie(SuiteContext& ctx);
void run_group(SuiteContext& ctx);
void run_rep(SuiteContext& ctx);
void run_fueter(SuiteContext& ctx);
void run_forms(SuiteContext& ctx);
void run_cauchy(SuiteContext& ctx);
void run_level(SuiteContext& ctx);

}  // namespace sp11::detail
