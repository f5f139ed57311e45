#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace sp11 {

enum class CheckMode { exact, floating };

struct Check {
    std::string id;
    std::string paper_ref;  // the identity being checked, in words
    CheckMode mode = CheckMode::exact;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

Check exact_check(std::string id, std::string statement, double residual);
Check float_check(std::string id, std::string statement, double residual, double tol);

struct VerifyReport {
    std::string suite;
    std::vector<Check> checks;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();  // suite-specific output

    bool passed() const;
    const Check* find(const std::string& id) const;
    void sort();
    std::string to_json() const;
    std::string to_text() const;
};

}  // namespace sp11
