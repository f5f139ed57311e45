#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sp11/report.hpp"

namespace sp11 {

struct SuiteConfig {
    std::uint64_t seed = 7;
    std::optional<double> tol;     // overrides the default 1e-10 float tolerance
    std::optional<int> samples;    // overrides per-suite sample counts
    int max_degree = 5;
    int level = 5;
    int degree = 4;
    double radius = 0.5;
    long N = 2;
    long height = 4;

    void validate() const;  // throws ConfigError
};

const std::vector<std::string>& suite_names();

// name ∈ {lie, group, rep, fueter, forms, cauchy, level, all}.
VerifyReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace sp11
