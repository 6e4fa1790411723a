#include <doctest.h>

#include <json.hpp>

#include "chainmail/verify.hpp"

using namespace chainmail;

TEST_CASE("expected sphere patterns")
{
    CHECK(expected_delta_string_sphere(0) == -1);
    CHECK(expected_delta_string_sphere(1) == 0);
    CHECK_FALSE(expected_delta_string_sphere(2).has_value());
    CHECK(expected_delta_string_sphere(3) == 1);
    CHECK(expected_delta_string_sphere(4) == 2);
    CHECK(expected_hook_sphere(3, 0) == -1);
    CHECK(expected_hook_sphere(3, 1) == 0);
}

TEST_CASE("small suites pass")
{
    SuiteOptions opt;
    opt.max_t = 5;
    opt.max_k = 3;
    for (const char* name : {"prop13", "prop15", "eq21", "sec4-string", "descriptions"}) {
        CAPTURE(name);
        auto r = run_suite(name, opt);
        CHECK(r.suite == name);
        CHECK(r.cases.size() > 0);
        CHECK(r.all_passed());
    }
    CHECK(verify_prop13(SuiteOptions{}).cases.size() == 10);
    CHECK_THROWS_AS(run_suite("nope", opt), InputError);
}

TEST_CASE("report JSON")
{
    SuiteOptions opt;
    opt.max_t = 4;
    auto r = verify_prop13(opt);
    std::reverse(r.cases.begin(), r.cases.end());
    auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["suite"] == "prop13");
    CHECK(j["certificate"] == "homology-verified");
    CHECK(j["summary"]["total"] == 5);
    CHECK(j["summary"]["passed"] == 5);
    CHECK(j["summary"]["failed"] == 0);
    CHECK_FALSE(j.contains("wall_time_ms"));
    REQUIRE(j["cases"].size() == 5);
    CHECK(j["cases"][0]["instance"] == "Delta(L_0)");
    CHECK(nlohmann::json::parse(r.to_json(true)).contains("wall_time_ms"));
    CHECK(verify_prop13(opt).to_json() == verify_prop13(opt).to_json());
}

TEST_CASE("thm32 reports failures with witnesses")
{
    SuiteOptions opt;
    opt.max_tree_vertices = 4;
    auto r = verify_thm32(opt);
    CHECK(r.cases.size() == 5);
    CHECK(r.passed() == 4);
    auto star = Tree({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}});
    auto c = check_phi(star);
    CHECK_FALSE(c.pass());
    CHECK_FALSE(c.witness.empty());
    auto j = nlohmann::json::parse(quillen_json(star, c));
    CHECK(j["simplicial"] == false);
    CHECK(j.contains("non_simplicial_witness"));
    opt.max_tree_vertices = 10;
    CHECK_THROWS_AS(verify_thm32(opt), CapacityError);
}

TEST_CASE("random trees in thm32 are reproducible")
{
    SuiteOptions opt;
    opt.max_tree_vertices = 2;
    opt.random_trees = 3;
    opt.random_tree_vertices = 5;
    opt.seed = 42;
    CHECK(verify_thm32(opt).to_json() == verify_thm32(opt).to_json());
}
