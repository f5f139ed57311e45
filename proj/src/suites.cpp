#include "sp11/suites.hpp"

#include <cmath>

#include "sp11/errors.hpp"
#include "suite_util.hpp"

namespace sp11 {

void SuiteConfig::validate() const {
    if (tol && !(*tol > 0.0 && std::isfinite(*tol))) throw ConfigError("--tol must be positive");
    if (samples && *samples < 1) throw ConfigError("--samples must be at least 1");
    if (max_degree < 1 || max_degree > 8) throw ConfigError("--max-degree must be in 1..8");
    if (level < 1 || level > 40) throw ConfigError("--level must be in 1..40");
    if (degree < 0 || degree > 8) throw ConfigError("--degree must be in 0..8");
    if (!(radius > 0.0 && radius <= 10.0)) throw ConfigError("--radius must be in (0, 10]");
    if (N < 1) throw ConfigError("--N must be at least 1");
    if (height < 1 || height > 8) throw ConfigError("--height must be in 1..8");
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lie", "group", "rep", "fueter", "forms", "cauchy", "level"};
    return names;
}

namespace {

void run_one(const std::string& name, const SuiteConfig& cfg, VerifyReport& report) {
    detail::SuiteContext ctx{cfg, Rng(detail::suite_seed(cfg.seed, name)), report};
    if (name == "lie") detail::run_lie(ctx);
    else if (name == "group") detail::run_group(ctx);
    else if (name == "rep") detail::run_rep(ctx);
    else if (name == "fueter") detail::run_fueter(ctx);
    else if (name == "forms") detail::run_forms(ctx);
    else if (name == "cauchy") detail::run_cauchy(ctx);
    else if (name == "level") detail::run_level(ctx);
    else throw ConfigError("unknown suite: " + name);
}

}  // namespace

VerifyReport run_suite(const std::string& name, const SuiteConfig& config) {
    config.validate();
    VerifyReport report;
    report.suite = name;
    if (name == "all") {
        for (const auto& n : suite_names()) {
            VerifyReport part;
            run_one(n, config, part);
            report.checks.insert(report.checks.end(), part.checks.begin(), part.checks.end());
            if (!part.data.empty()) report.data[n] = part.data;
        }
    } else {
        run_one(name, config, report);
    }
    report.sort();
    return report;
}

}  // namespace sp11
