#include <doctest.h>

#include <random>
#include <sstream>

#include "random_report.hpp"
#include "simdbench/error.hpp"
#include "simdbench/report.hpp"

using namespace simdbench;

TEST_CASE("reports round-trip through JSON") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 50; ++round) {
        const auto report = testing::random_report(rng);
        const auto text = to_json_text(report);
        const auto back = parse_report(text);
        CHECK(back == report);
        CHECK(to_json_text(back) == text);
    }
}

TEST_CASE("unknown hardware fields serialise as the string unknown") {
    Report r;
    r.config.config_name = "oth_unknown";
    const auto text = to_json_text(r);
    CHECK(text.find("\"core_count\": \"unknown\"") != std::string::npos);
    CHECK(text.find("\"memory_bytes\": \"unknown\"") != std::string::npos);
}

TEST_CASE("malformed reports are rejected") {
    CHECK_THROWS_AS(parse_report("{"), ReportError);
    CHECK_THROWS_AS(parse_report("{}"), ReportError);
    std::mt19937_64 rng(1);
    auto text = to_json_text(testing::random_report(rng));
    const auto pos = text.find(kReportFormatVersion);
    text.replace(pos, kReportFormatVersion.size(), "simdbench-report/999");
    CHECK_THROWS_AS(parse_report(text), ReportError);
}

TEST_CASE("csv has one row per scenario and variant") {
    std::mt19937_64 rng(5);
    Report r = testing::random_report(rng);
    while (r.results.empty()) r = testing::random_report(rng);
    const auto csv = to_csv(r);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == kCsvHeader);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        const auto& res = r.results[rows / 2];
        std::vector<std::string> cols;
        std::stringstream ls(line);
        for (std::string col; std::getline(ls, col, ',');) cols.push_back(col);
        REQUIRE(cols.size() == 8);
        CHECK(cols[0] == r.config.config_name);
        CHECK(cols[1] == r.config.opt_level.label);
        CHECK(std::stoi(cols[2]) == res.scenario_id);
        CHECK(cols[3] == (rows % 2 == 0 ? "plain" : "vector"));
        const auto& stats = rows % 2 == 0 ? res.plain_stats : res.vector_stats;
        CHECK(std::stod(cols[4]) == stats.mean_ns);
        CHECK(std::stod(cols[5]) == stats.std_dev_ns);
        CHECK(std::stod(cols[6]) == res.ratio.tau);
        CHECK(std::stod(cols[7]) == res.ratio.sigma_tau);
        ++rows;
    }
    CHECK(rows == 2 * r.results.size());
}
