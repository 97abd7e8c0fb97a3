#include "simdbench/report.hpp"

#include <charconv>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "simdbench/datagen.hpp"
#include "simdbench/error.hpp"
#include "simdbench/lanes.hpp"

namespace simdbench {

using nlohmann::json;

namespace {

// JSON has no NaN or infinity; they travel as null.
json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double read_number(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

template <class T>
json optional_or_unknown(const std::optional<T>& value) {
    return value ? json(*value) : json("unknown");
}

template <class T>
std::optional<T> read_optional(const json& j) {
    if (j.is_string()) return std::nullopt;
    return j.get<T>();
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace

void to_json(json& j, const ConfigMetadata& c) {
    j = json{{"os_family", to_string(c.os_family)},
             {"os_version", c.os_version},
             {"architecture", to_string(c.architecture)},
             {"cpu_model", c.cpu_model},
             {"core_count", optional_or_unknown(c.core_count)},
             {"memory_bytes", optional_or_unknown(c.memory_bytes)},
             {"toolchain_name", c.toolchain_name},
             {"toolchain_version", c.toolchain_version},
             {"opt_level", c.opt_level.label},
             {"config_name", c.config_name}};
}

void from_json(const json& j, ConfigMetadata& c) {
    const auto os = parse_os_family(j.at("os_family").get<std::string>());
    const auto arch = parse_architecture(j.at("architecture").get<std::string>());
    if (!os || !arch) throw ReportError("unknown os_family or architecture in report");
    c.os_family = *os;
    c.architecture = *arch;
    c.os_version = j.at("os_version").get<std::string>();
    c.cpu_model = j.at("cpu_model").get<std::string>();
    c.core_count = read_optional<unsigned>(j.at("core_count"));
    c.memory_bytes = read_optional<std::uint64_t>(j.at("memory_bytes"));
    c.toolchain_name = j.at("toolchain_name").get<std::string>();
    c.toolchain_version = j.at("toolchain_version").get<std::string>();
    c.opt_level = parse_opt_level(j.at("opt_level").get<std::string>());
    c.config_name = j.at("config_name").get<std::string>();
}

void to_json(json& j, const GeneratorInfo& g) {
    j = json{{"name", g.name}, {"mapping", g.mapping}, {"seed", g.seed}};
}

void from_json(const json& j, GeneratorInfo& g) {
    g.name = j.at("name").get<std::string>();
    g.mapping = j.at("mapping").get<std::string>();
    g.seed = j.at("seed").get<std::uint64_t>();
}

void to_json(json& j, const RunStats& s) {
    j = json{{"mean_ns", number(s.mean_ns)}, {"std_dev_ns", number(s.std_dev_ns)}, {"count", s.count}};
}

void from_json(const json& j, RunStats& s) {
    s.mean_ns = read_number(j.at("mean_ns"));
    s.std_dev_ns = read_number(j.at("std_dev_ns"));
    s.count = j.at("count").get<std::size_t>();
}

void to_json(json& j, const Verification& v) {
    j = json{{"tolerance", number(v.tolerance)},
             {"max_abs_diff", number(v.max_abs_diff)},
             {"max_rel_diff", number(v.max_rel_diff)},
             {"worst_index", v.worst_index},
             {"worst_plain", number(v.worst_plain)},
             {"worst_vector", number(v.worst_vector)},
             {"compared", v.compared},
             {"passed", v.passed}};
}

void from_json(const json& j, Verification& v) {
    v.tolerance = read_number(j.at("tolerance"));
    v.max_abs_diff = read_number(j.at("max_abs_diff"));
    v.max_rel_diff = read_number(j.at("max_rel_diff"));
    v.worst_index = j.at("worst_index").get<std::size_t>();
    v.worst_plain = static_cast<float>(read_number(j.at("worst_plain")));
    v.worst_vector = static_cast<float>(read_number(j.at("worst_vector")));
    v.compared = j.at("compared").get<std::size_t>();
    v.passed = j.at("passed").get<bool>();
}

namespace {

json samples_json(const std::vector<TimingSample>& samples) {
    json out = json::array();
    for (const auto& s : samples) out.push_back(s.duration.count());
    return out;
}

std::vector<TimingSample> read_samples(const json& j) {
    std::vector<TimingSample> out;
    for (const auto& v : j) out.push_back({std::chrono::nanoseconds{v.get<std::int64_t>()}});
    return out;
}

}  // namespace

void to_json(json& j, const ScenarioResult& r) {
    j = json{{"scenario_id", r.scenario_id},
             {"length", r.length},
             {"seed", r.seed},
             {"scheme", {{"tag", to_string(r.scheme.tag)}, {"repeats", r.scheme.repeats}}},
             {"plain_stats", r.plain_stats},
             {"vector_stats", r.vector_stats},
             {"ratio", {{"tau", number(r.ratio.tau)}, {"sigma_tau", number(r.ratio.sigma_tau)}}},
             {"verification", r.verification},
             {"raw_samples", {{"plain", samples_json(r.plain_samples)}, {"vector", samples_json(r.vector_samples)}}},
             {"checksum", number(r.checksum)},
             {"sequence_emulated", r.sequence_emulated},
             {"warnings", r.warnings}};
}

void from_json(const json& j, ScenarioResult& r) {
    r.scenario_id = j.at("scenario_id").get<int>();
    r.length = j.at("length").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    const auto tag = parse_scheme(j.at("scheme").at("tag").get<std::string>());
    if (!tag) throw ReportError("unknown scheme in report");
    r.scheme = {*tag, j.at("scheme").at("repeats").get<int>()};
    r.plain_stats = j.at("plain_stats").get<RunStats>();
    r.vector_stats = j.at("vector_stats").get<RunStats>();
    r.ratio = {read_number(j.at("ratio").at("tau")), read_number(j.at("ratio").at("sigma_tau"))};
    r.verification = j.at("verification").get<Verification>();
    r.plain_samples = read_samples(j.at("raw_samples").at("plain"));
    r.vector_samples = read_samples(j.at("raw_samples").at("vector"));
    r.checksum = read_number(j.at("checksum"));
    r.sequence_emulated = j.at("sequence_emulated").get<bool>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
}

void to_json(json& j, const FailureRecord& f) {
    j = json{{"scenario_id", f.scenario_id}, {"length", f.length}, {"seed", f.seed}, {"verification", f.verification}};
}

void from_json(const json& j, FailureRecord& f) {
    f.scenario_id = j.at("scenario_id").get<int>();
    f.length = j.at("length").get<std::size_t>();
    f.seed = j.at("seed").get<std::uint64_t>();
    f.verification = j.at("verification").get<Verification>();
}

GeneratorInfo generator_info(std::uint64_t seed) {
    return {std::string(kGeneratorName), std::string(kGeneratorMapping), seed};
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
#if defined(_WIN32)
    gmtime_s(&utc, &now);
#else
    gmtime_r(&now, &utc);
#endif
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

std::string to_json_text(const Report& report) {
    json j{{"format_version", report.format_version},
           {"created_at", report.created_at},
           {"config", report.config},
           {"generator", report.generator},
           {"lane_backend", report.lane_backend},
           {"results", report.results},
           {"failures", report.failures}};
    return j.dump(2) + "\n";
}

Report parse_report(std::string_view text) {
    try {
        const json j = json::parse(text);
        Report r;
        r.format_version = j.at("format_version").get<std::string>();
        if (r.format_version != kReportFormatVersion) {
            throw ReportError("unsupported report format '" + r.format_version + "'");
        }
        r.created_at = j.at("created_at").get<std::string>();
        r.config = j.at("config").get<ConfigMetadata>();
        r.generator = j.at("generator").get<GeneratorInfo>();
        r.lane_backend = j.at("lane_backend").get<std::string>();
        r.results = j.at("results").get<std::vector<ScenarioResult>>();
        r.failures = j.at("failures").get<std::vector<FailureRecord>>();
        return r;
    } catch (const json::exception& e) {
        throw ReportError(std::string("malformed report: ") + e.what());
    }
}

std::string to_csv(const Report& report) {
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (const auto& r : report.results) {
        const auto row = [&](std::string_view variant, const RunStats& s) {
            os << report.config.config_name << ',' << report.config.opt_level.label << ',' << r.scenario_id << ','
               << variant << ',' << format_double(s.mean_ns) << ',' << format_double(s.std_dev_ns) << ','
               << format_double(r.ratio.tau) << ',' << format_double(r.ratio.sigma_tau) << '\n';
        };
        row(to_string(Variant::plain), r.plain_stats);
        row(to_string(Variant::vector), r.vector_stats);
    }
    return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace simdbench
