#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "simdbench/advisor.hpp"
#include "simdbench/configmeta.hpp"
#include "simdbench/lanes.hpp"
#include "simdbench/report.hpp"
#include "simdbench/scenarios.hpp"

namespace simdbench::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::vector<int> parse_scenarios(const std::vector<std::string>& items) {
    std::vector<int> ids;
    for (const auto& item : items) {
        if (item == "all") {
            for (const auto& spec : catalogue()) ids.push_back(spec.id);
            continue;
        }
        int id = 0;
        try {
            std::size_t used = 0;
            id = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("invalid scenario '" + item + "' (expected 1..8 or 'all')");
        }
        if (id < 1 || id > 8) throw UsageError("invalid scenario " + item + " (expected 1..8)");
        ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) throw UsageError("no scenarios selected");
    return ids;
}

std::string format_ms(const RunStats& s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s.mean_ns / 1e6 << " +/- " << s.std_dev_ns / 1e6 << " ms";
    return os.str();
}

std::string format_percent(const RatioResult& r) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << r.tau * 100.0 << " +/- " << r.sigma_tau * 100.0 << " %";
    return os.str();
}

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.scheme.repeats < 2) {
        throw UsageError("--repeats must be at least 2 (a standard deviation needs two samples)");
    }
    for (const int id : opts.scenarios) {
        const auto& spec = scenario(id);
        if (opts.length < min_length(spec)) {
            throw UsageError("scenario " + std::to_string(id) + " needs --length >= " +
                             std::to_string(min_length(spec)));
        }
    }

    Report report;
    report.config = detect(opts.opt_level ? std::optional(parse_opt_level(*opts.opt_level)) : std::nullopt);
    report.generator = generator_info(opts.seed);
    report.lane_backend = std::string(lanes::kActiveBackend);
    report.created_at = utc_timestamp();

    out << "config " << report.config.config_name << " (" << report.config.opt_level.label << "), backend "
        << report.lane_backend << ", length " << opts.length << ", " << opts.scheme.repeats << " repeats, "
        << to_string(opts.scheme.tag) << "\n";

    for (const int id : opts.scenarios) {
        const auto& spec = scenario(id);
        try {
            auto result = run_scenario(spec, opts.length, opts.seed, opts.scheme, opts.tolerances);
            out << "scenario " << id << ": plain " << format_ms(result.plain_stats) << ", vector "
                << format_ms(result.vector_stats) << ", tau " << format_percent(result.ratio)
                << (result.sequence_emulated ? " [sequence-emulated]" : "") << "\n";
            for (const auto& w : result.warnings) err << "warning: scenario " << id << ": " << w << "\n";
            report.results.push_back(std::move(result));
        } catch (const VerificationFailure& failure) {
            err << "error: " << failure.what() << "\n";
            report.failures.push_back({id, opts.length, opts.seed, failure.record()});
        }
    }

    write_text_file(opts.report_path, to_json_text(report));
    out << "report written to " << opts.report_path << "\n";
    if (opts.csv_path) {
        write_text_file(*opts.csv_path, to_csv(report));
        out << "table written to " << *opts.csv_path << "\n";
    }
    return report.failures.empty() ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    const auto cases = verify_sweep(opts.scenarios, opts.lengths, opts.seeds, opts.tolerances, opts.backend);
    std::size_t applicable = 0;
    std::size_t failed = 0;
    std::set<std::pair<int, std::size_t>> skipped;
    for (const auto& vc : cases) {
        if (!vc.applicable) {
            skipped.insert({vc.scenario_id, vc.length});
            continue;
        }
        ++applicable;
        if (!vc.verification.passed) {
            ++failed;
            const auto& v = vc.verification;
            err << "FAIL scenario " << vc.scenario_id << " length " << vc.length << " seed " << vc.seed
                << ": index " << v.worst_index << " plain " << v.worst_plain << " vector " << v.worst_vector
                << " (max rel diff " << v.max_rel_diff << ", tolerance " << v.tolerance << ")\n";
        }
    }
    for (const auto& [id, length] : skipped) {
        err << "scenario " << id << " needs at least " << min_length(scenario(id)) << " elements; length "
            << length << " skipped\n";
    }
    if (applicable == 0) {
        err << "error: no applicable (scenario, length) combination to verify\n";
        return kExitUsage;
    }

    // Worst relative difference per scenario, for choosing tolerances.
    for (const int id : opts.scenarios) {
        double worst = 0.0;
        bool any = false;
        for (const auto& vc : cases) {
            if (vc.scenario_id == id && vc.applicable) {
                worst = std::max(worst, vc.verification.max_rel_diff);
                any = true;
            }
        }
        if (any) {
            out << "scenario " << id << ": max relative difference " << worst << " (tolerance "
                << opts.tolerances.for_scenario(scenario(id)) << ")\n";
        }
    }
    out << (applicable - failed) << "/" << applicable << " checks passed\n";
    return failed == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_advise(const std::string& device_text, const std::vector<std::string>& available_text, bool as_json,
               std::ostream& out) {
    const auto device = parse_device(device_text);
    if (!device) throw UsageError("unknown device '" + device_text + "' (windows, linux, macos, other)");
    std::set<Toolchain> available;
    for (const auto& name : available_text) {
        const auto t = parse_toolchain(name);
        if (!t) throw UsageError("unknown toolchain '" + name + "'");
        available.insert(*t);
    }
    const auto rec = advise(*device, available);
    if (as_json) {
        nlohmann::json j{{"device", to_string(*device)},
                         {"toolchain", rec.toolchain ? to_string(*rec.toolchain) : std::string_view("unknown")},
                         {"intrinsics_policy", to_string(rec.intrinsics_policy)},
                         {"message", rec.message()},
                         {"rationale", rec.rationale}};
        out << j.dump(2) << "\n";
    } else {
        out << rec.message() << "\n" << "(" << rec.rationale << ")\n";
    }
    return kExitOk;
}

int cmd_list(std::ostream& out) {
    out << "id  offsets  transcendental  conditional  description\n";
    for (const auto& spec : catalogue()) {
        out << std::left << std::setw(4) << spec.id << std::setw(9) << (spec.uses_offsets ? "yes" : "no")
            << std::setw(16) << (spec.uses_transcendentals ? "yes" : "no") << std::setw(13)
            << to_string(spec.conditional_kind) << spec.description
            << (sequence_emulated(spec) ? " [sequence-emulated]" : "") << "\n";
    }
    out << "lane backend: " << lanes::kActiveBackend << ", " << lanes::kWidth << " lanes\n";
    return kExitOk;
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Scalar vs. 8-lane SIMD kernel benchmark"};
    app.require_subcommand(1);

    RunOptions run_opts;
    std::vector<std::string> run_scenarios{"all"};
    std::string run_scheme{to_string(run_opts.scheme.tag)};
    std::optional<double> run_tolerance;
    auto* run = app.add_subcommand("run", "Measure plain and vector kernels and write a report");
    run->add_option("-s,--scenarios", run_scenarios, "Scenario ids or 'all'")->delimiter(',');
    run->add_option("-n,--length", run_opts.length, "Elements per array")->capture_default_str();
    run->add_option("-r,--repeats", run_opts.scheme.repeats, "Timed executions per variant")->capture_default_str();
    run->add_option("--scheme", run_scheme, "interleaved or blocked")
        ->check(CLI::IsMember({"interleaved", "blocked"}))
        ->capture_default_str();
    run->add_option("--seed", run_opts.seed, "Data generator seed")->capture_default_str();
    run->add_option("--tolerance", run_tolerance, "Relative verification tolerance for every scenario");
    run->add_option("--opt-level", run_opts.opt_level, "Optimisation level recorded in the report");
    run->add_option("-o,--output", run_opts.report_path, "Report file (JSON)")->capture_default_str();
    run->add_option("--csv", run_opts.csv_path, "Also write the comma-separated table here");

    VerifyOptions verify_opts;
    std::vector<std::string> verify_scenarios{"all"};
    std::optional<double> verify_tolerance;
    std::string backend_text = "active";
    auto* verify_cmd = app.add_subcommand("verify", "Check vector kernels against the scalar reference");
    verify_cmd->add_option("-s,--scenarios", verify_scenarios, "Scenario ids or 'all'")->delimiter(',');
    verify_cmd->add_option("--lengths", verify_opts.lengths, "Array lengths")->delimiter(',');
    verify_cmd->add_option("--seeds", verify_opts.seeds, "Generator seeds")->delimiter(',');
    verify_cmd->add_option("--tolerance", verify_tolerance, "Relative tolerance for every scenario");
    verify_cmd->add_option("--backend", backend_text, "Lane backend: active or emulated")
        ->check(CLI::IsMember({"active", "emulated"}));

    std::string device;
    std::vector<std::string> available;
    bool advise_json = false;
    auto* advise_cmd = app.add_subcommand("advise", "Recommend a toolchain and intrinsics policy");
    advise_cmd->add_option("-d,--device", device, "windows, linux, macos or other")->required();
    advise_cmd->add_option("-a,--available", available, "Available toolchains, e.g. icc,msvc,gcc")->delimiter(',');
    advise_cmd->add_flag("--json", advise_json, "Machine-readable output");

    auto* list_cmd = app.add_subcommand("list", "List the benchmark scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run) {
            run_opts.scenarios = parse_scenarios(run_scenarios);
            run_opts.scheme.tag = *parse_scheme(run_scheme);
            run_opts.tolerances.override_all = run_tolerance;
            return cmd_run(run_opts, out, err);
        }
        if (*verify_cmd) {
            verify_opts.scenarios = parse_scenarios(verify_scenarios);
            verify_opts.tolerances.override_all = verify_tolerance;
            verify_opts.backend = backend_text == "emulated" ? Backend::emulated : Backend::active;
            return cmd_verify(verify_opts, out, err);
        }
        if (*advise_cmd) return cmd_advise(device, available, advise_json, out);
        if (*list_cmd) return cmd_list(out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SizingError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace simdbench::cli
