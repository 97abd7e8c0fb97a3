#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "simdbench/configmeta.hpp"
#include "simdbench/harness.hpp"

namespace simdbench {

inline constexpr std::string_view kReportFormatVersion = "simdbench-report/1";

/// Header row of the tabular export.
inline constexpr std::string_view kCsvHeader = "config_name,opt_level,scenario,variant,mean_ns,std_ns,tau,sigma_tau";

struct GeneratorInfo {
    std::string name;
    std::string mapping;
    std::uint64_t seed = 0;

    friend bool operator==(const GeneratorInfo&, const GeneratorInfo&) = default;
};

GeneratorInfo generator_info(std::uint64_t seed);

/// A scenario whose variants disagreed; it has no timings.
struct FailureRecord {
    int scenario_id = 0;
    std::size_t length = 0;
    std::uint64_t seed = 0;
    Verification verification;

    friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

struct Report {
    std::string format_version{kReportFormatVersion};
    ConfigMetadata config;
    GeneratorInfo generator;
    std::string lane_backend;
    std::vector<ScenarioResult> results;
    std::vector<FailureRecord> failures;
    std::string created_at;

    friend bool operator==(const Report&, const Report&) = default;
};

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

std::string to_json_text(const Report& report);

/// Throws ReportError on malformed input or an unsupported format version.
Report parse_report(std::string_view text);

/// One row per (scenario, variant); fractions, not percentages.
std::string to_csv(const Report& report);

void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace simdbench
