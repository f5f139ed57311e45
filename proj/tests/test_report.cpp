#include <gtest/gtest.h>

#include <json.hpp>

#include "sp11/errors.hpp"
#include "sp11/suites.hpp"

using namespace sp11;

TEST(Report, CheckSemantics) {
    EXPECT_TRUE(exact_check("a", "s", 0.0).pass);
    EXPECT_FALSE(exact_check("a", "s", 1e-300).pass);
    EXPECT_TRUE(float_check("a", "s", 1e-11, 1e-10).pass);
    EXPECT_FALSE(float_check("a", "s", 1e-10, 1e-10).pass);
}

TEST(Report, JsonShape) {
    VerifyReport r;
    r.suite = "demo";
    r.checks.push_back(float_check("demo.b", "second", 0.5, 1e-10));
    r.checks.push_back(exact_check("demo.a", "first", 0.0));
    r.sort();
    const auto j = nlohmann::json::parse(r.to_json());
    EXPECT_EQ(j["suite"], "demo");
    EXPECT_EQ(j["passed"], false);
    ASSERT_EQ(j["checks"].size(), 2u);
    EXPECT_EQ(j["checks"][0]["id"], "demo.a");
    EXPECT_EQ(j["checks"][0]["mode"], "exact");
    EXPECT_FALSE(j["checks"][0].contains("tol"));
    EXPECT_EQ(j["checks"][1]["mode"], "float");
    EXPECT_EQ(j["checks"][1]["pass"], false);
    EXPECT_NE(r.to_text().find("1/2 checks passed"), std::string::npos);
}

TEST(Suites, ConfigValidation) {
    SuiteConfig c;
    c.level = 0;
    EXPECT_THROW(run_suite("lie", c), ConfigError);
    EXPECT_THROW(run_suite("nope", SuiteConfig{}), ConfigError);
    SuiteConfig t;
    t.tol = -1.0;
    EXPECT_THROW(t.validate(), ConfigError);
}

TEST(Suites, LieDeterministicAndPassing) {
    const VerifyReport a = run_suite("lie", SuiteConfig{}), b = run_suite("lie", SuiteConfig{});
    EXPECT_EQ(a.to_json(), b.to_json());
    EXPECT_TRUE(a.passed());
    ASSERT_NE(a.find("lie.killing_sp11"), nullptr);
    EXPECT_EQ(a.find("lie.killing_sp11")->residual, 0.0);
}

TEST(Suites, GroupPassesAtSmallSampleCount) {
    SuiteConfig c;
    c.samples = 5;
    EXPECT_TRUE(run_suite("group", c).passed());
}
