#include <doctest.h>

#include "bilie/cli.hpp"

#include <filesystem>
#include <fstream>

using namespace bilie;
using nlohmann::json;

namespace {

const json kB2{{"algebra", "B2"}, {"builder", "ex12.13"}, {"times", {0, 2, 4}}};

} // namespace

TEST_CASE("run on the B2 catalog entry")
{
    auto r = run_json(kB2);
    CHECK(r.status == "pass");
    CHECK(r.exit_code == ExitPass);
    CHECK(r.doc.at("schema") == kReportSchema);
    CHECK(r.doc.at("times").at("times") == json({"0", "2", "4"}));
    CHECK_FALSE(r.doc.contains("timing"));
    CHECK(r.doc.at("diagram").size() == 4);
    // byte-identical reports
    CHECK(run_json(kB2).text() == r.text());
    RunOptions t;
    t.timing = true;
    CHECK(run_json(kB2, t).doc.contains("timing"));
}

TEST_CASE("exit codes")
{
    CHECK(run_json({{"algebra", "A1"}, {"builder", "ex12.12"}, {"times", {0}}}).exit_code == ExitPrecondition);
    CHECK(run_json({{"algebra", "B2"}, {"builder", "ex12.13"}, {"times", {0.5, 1, 2}}}).exit_code == ExitConfig);
    CHECK(run_json({{"algebra", "B2"}, {"builder", "ex99"}, {"times", {0, 1}}}).exit_code == ExitConfig);
    CHECK(run_json({{"algebra", "Q7"}, {"builder", "ex12.13"}, {"times", {0, 1}}}).exit_code == ExitConfig);
    CHECK(run_json({{"algebra", "B2"}, {"builder", "ex12.13"}, {"times", {0, 1, 2}}, {"colour", 1}}).exit_code ==
          ExitConfig);
    CHECK(run_json({{"algebra", "A3"}, {"builder", "ex12.17"}, {"times", {0, 1, 2}}}).exit_code == ExitConfig);
    CHECK(run_json("not an object").exit_code == ExitConfig);
    // distinct times are a builder precondition
    CHECK(run_json({{"algebra", "B2"}, {"builder", "ex12.13"}, {"times", {0, 1, 1}}}).exit_code == ExitPrecondition);
    CHECK(run_json({{"algebra", "so3"}, {"builder", "matrix.so"}, {"diag", {1, 2, 3}}}).exit_code == ExitCheckFailure);
}

TEST_CASE("check selection")
{
    json c = kB2;
    c["checks"] = {"jacobi", "times_equal_base"};
    auto r = run_json(c);
    REQUIRE(r.checks.size() == 2);
    CHECK(r.checks[1].name == "times_equal_base");
    c["checks"] = {"no_such_check"};
    CHECK(run_json(c).exit_code == ExitConfig);
}

TEST_CASE("Gaussian rational parameters")
{
    auto r = run_json({{"algebra", "A2"}, {"builder", "ex12.16"}, {"times", {"i", "1/2", "-1+2i"}}});
    CHECK(r.status == "pass");
    CHECK(r.doc.at("times").at("times").size() == 3);
}

TEST_CASE("manifests")
{
    auto empty = verify_all({});
    CHECK(empty.jobs == 0);
    CHECK(empty.exit_code == ExitPass);
    CHECK(empty.failures.empty());

    json faulty = kB2;
    faulty["name"] = "faulty";
    faulty["fault"] = {{"kind", "structure_constant"}, {"index", 3}};
    json neg{{"algebra", "A1"}, {"builder", "ex12.12"}, {"times", {0}}, {"expect", "precondition_error"}};
    std::vector<json> jobs{kB2, faulty, neg};
    ManifestOptions two;
    two.jobs = 2;
    auto s = verify_all(jobs, two);
    CHECK(s.ok == 2);
    REQUIRE(s.failures.size() == 1);
    CHECK(s.failures[0].rfind("faulty:", 0) == 0);
    CHECK(s.exit_code == ExitCheckFailure);
    auto s1 = verify_all(jobs);
    for (std::size_t k = 0; k < jobs.size(); ++k) CHECK(s1.reports[k].text() == s.reports[k].text());
    CHECK(manifest_jobs({{"jobs", jobs}}).size() == 3);
    CHECK_THROWS_AS(manifest_jobs(json(3)), ConfigError);
}

TEST_CASE("golden comparison")
{
    auto dir = std::filesystem::temp_directory_path() / "bilie-golden-test";
    std::filesystem::create_directories(dir);
    json job = kB2;
    job["name"] = "b2";
    ManifestOptions o;
    o.golden_dir = dir.string();
    o.update_golden = true;
    CHECK(verify_all({job}, o).exit_code == ExitPass);
    o.update_golden = false;
    CHECK(verify_all({job}, o).exit_code == ExitPass);
    {
        std::ofstream f(dir / "b2.json", std::ios::app);
        f << " ";
    }
    auto s = verify_all({job}, o);
    CHECK(s.exit_code == ExitCheckFailure);
    REQUIRE(s.failures.size() == 1);
    CHECK(s.failures[0].find("golden") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("fault sites")
{
    auto f = fault_sites(parse_config(kB2));
    CHECK(f.structure_constants > 0);
    CHECK(f.eigenvalues == 10);
    json bad = kB2;
    bad["fault"] = {{"kind", "eigenvalue"}, {"index", 10}};
    CHECK(run_json(bad).exit_code == ExitConfig);
    bad["fault"] = {{"kind", "eigenvalue"}, {"index", 0}};
    auto r = run_json(bad);
    CHECK(r.status == "fail");
    CHECK(r.doc.at("fault").at("kind") == "eigenvalue");
}
