#include "sp11/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace sp11 {

Check exact_check(std::string id, std::string statement, double residual) {
    return {std::move(id), std::move(statement), CheckMode::exact, residual, 0.0, residual == 0.0};
}

Check float_check(std::string id, std::string statement, double residual, double tol) {
    return {std::move(id), std::move(statement), CheckMode::floating, residual, tol, residual < tol};
}

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerifyReport::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

void VerifyReport::sort() {
    std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
}

namespace {
std::string mode_name(CheckMode m) { return m == CheckMode::exact ? "exact" : "float"; }

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}
}  // namespace

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["passed"] = passed();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["paper_ref"] = c.paper_ref;
        e["mode"] = mode_name(c.mode);
        e["residual"] = c.residual;
        if (c.mode == CheckMode::floating) e["tol"] = c.tol;
        e["pass"] = c.pass;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    if (!data.empty()) j["data"] = data;
    return j.dump(2) + "\n";
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << "\n";
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.id.size());
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.id << std::string(width - c.id.size() + 2, ' ')
           << mode_name(c.mode) << "  residual " << sci(c.residual);
        if (c.mode == CheckMode::floating) os << " < " << sci(c.tol);
        os << "  " << c.paper_ref << "\n";
    }
    const auto fails = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
    os << checks.size() - std::size_t(fails) << "/" << checks.size() << " checks passed\n";
    return os.str();
}

}  // namespace sp11
