#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "simdbench/report.hpp"

using namespace simdbench;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "simdbench");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("simdbench_test_" + name);
}

}  // namespace

TEST_CASE("defaults") {
    const cli::RunOptions run;
    CHECK(run.length == 50'000'000);
    CHECK(run.scheme.repeats == 50);
    CHECK(run.scheme.tag == Scheme::interleaved);
    CHECK(run.scenarios.size() == 8);
    const cli::VerifyOptions verify;
    CHECK(verify.seeds.size() >= 5);
}

TEST_CASE("advise") {
    auto r = invoke({"advise", "--device", "windows", "--available", "icc,msvc"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("Use ICC, without intrinsic.\n", 0) == 0);

    r = invoke({"advise", "--device", "linux", "--available", "gcc"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("Use GCC, without intrinsic.\n", 0) == 0);

    r = invoke({"advise", "--device", "other"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("unknown\n", 0) == 0);

    r = invoke({"advise", "--device", "macos", "--available", "gcc", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"intrinsics_policy\": \"condition-branches-only\"") != std::string::npos);

    CHECK(invoke({"advise", "--device", "amiga"}).code == 2);
    CHECK(invoke({"advise"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"run", "--scheme", "random"}).code == 2);
    CHECK(invoke({"run", "--scenarios", "9"}).code == 2);
    CHECK(invoke({"run", "--repeats", "1", "--length", "16"}).code == 2);
    CHECK(invoke({"verify", "--lengths", "0"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("verify") {
    auto r = invoke({"verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("checks passed") != std::string::npos);

    r = invoke({"verify", "--scenarios", "2", "--lengths", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("scenario 2 needs at least 3 elements") != std::string::npos);

    r = invoke({"verify", "--scenarios", "3", "--tolerance", "0"});
    CHECK((r.code == 0 || r.code == 1));
    CHECK(invoke({"verify", "--scenarios", "3"}).code == 0);
    CHECK(invoke({"verify", "--backend", "emulated"}).code == 0);
}

TEST_CASE("run writes a report and a table") {
    const auto report_path = temp_path("report.json");
    const auto csv_path = temp_path("table.csv");
    const auto r = invoke({"run", "--scenarios", "all", "--repeats", "2", "--length", "10000", "--output",
                           report_path.string(), "--csv", csv_path.string(), "--opt-level", "O2"});
    CHECK(r.code == 0);
    const auto report = parse_report(read_text_file(report_path));
    REQUIRE(report.results.size() == 8);
    CHECK(report.failures.empty());
    CHECK(report.config.opt_level.label == "O2");
    for (std::size_t i = 0; i < 8; ++i) {
        const auto& res = report.results[i];
        CHECK(res.scenario_id == static_cast<int>(i) + 1);
        CHECK(res.length == 10000);
        CHECK(res.plain_samples.size() == 2);
        CHECK(res.verification.passed);
        CHECK(res.ratio.tau > 0.0);
    }
    const auto csv = read_text_file(csv_path);
    CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
    std::filesystem::remove(report_path);
    std::filesystem::remove(csv_path);
}

TEST_CASE("scenario 6 is bit exact at tolerance 0") {
    const auto report_path = temp_path("s6.json");
    const auto r = invoke({"run", "-s", "6", "-r", "3", "-n", "20000", "--tolerance", "0", "-o", report_path.string()});
    CHECK(r.code == 0);
    const auto report = parse_report(read_text_file(report_path));
    REQUIRE(report.results.size() == 1);
    CHECK(report.results[0].verification.max_rel_diff == 0.0);
    CHECK(report.results[0].verification.tolerance == 0.0);
    std::filesystem::remove(report_path);
}

TEST_CASE("list") {
    const auto r = invoke({"list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Simple condition on random data with basic operations.") != std::string::npos);
}
