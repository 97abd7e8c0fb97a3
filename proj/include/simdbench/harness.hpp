#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simdbench/defaults.hpp"
#include "simdbench/error.hpp"
#include "simdbench/scenarios.hpp"
#include "simdbench/stats.hpp"

namespace simdbench {

enum class Scheme {
    interleaved,  ///< [[plain, vector], [plain, vector], ...]
    blocked,      ///< [[plain, plain, ...], [vector, vector, ...]]
};

std::string_view to_string(Scheme scheme) noexcept;
std::optional<Scheme> parse_scheme(std::string_view text) noexcept;

struct SchedulingScheme {
    Scheme tag = Scheme::interleaved;
    int repeats = kDefaultRepeats;

    friend bool operator==(const SchedulingScheme&, const SchedulingScheme&) = default;
};

/// Relative tolerances used to compare the plain and vector outputs.
struct Tolerances {
    double basic = kBasicTolerance;
    double transcendental = kTranscendentalTolerance;
    /// When set, replaces both of the above.
    std::optional<double> override_all;

    double for_scenario(const ScenarioSpec& spec) const noexcept;
};

/// Outcome of an element-wise comparison of the two output buffers.
struct Verification {
    double tolerance = 0.0;
    double max_abs_diff = 0.0;
    double max_rel_diff = 0.0;
    /// Index of the element with the largest relative difference (or the
    /// first failing element when the comparison failed).
    std::size_t worst_index = 0;
    float worst_plain = 0.0f;
    float worst_vector = 0.0f;
    std::size_t compared = 0;
    bool passed = true;

    friend bool operator==(const Verification&, const Verification&) = default;
};

/// An element passes when both values are identical or
/// |p - v| <= tolerance * max(|p|, |v|). Throws PreconditionError when the
/// buffers differ in length.
Verification verify(std::span<const float> plain, std::span<const float> vector, double tolerance);

/// Compares `data.d_plain` against `data.d_vector`. Both variants must have
/// been run on `data` beforehand.
Verification verify(const ScenarioSpec& spec, const WorkloadData& data, double tolerance);

/// Raised when the variants disagree; measurement never starts.
class VerificationFailure : public Error {
public:
    VerificationFailure(int scenario_id, Verification record);

    int scenario_id() const noexcept { return scenario_id_; }
    const Verification& record() const noexcept { return record_; }

private:
    int scenario_id_;
    Verification record_;
};

/// Clock used to time kernel executions.
class TimeSource {
public:
    virtual ~TimeSource() = default;
    virtual std::chrono::nanoseconds now() = 0;
    /// Smallest observable tick, or zero when unknown.
    virtual std::chrono::nanoseconds resolution() = 0;
};

/// Monotonic high-resolution clock (std::chrono::steady_clock).
class SteadyTimeSource final : public TimeSource {
public:
    std::chrono::nanoseconds now() override;
    std::chrono::nanoseconds resolution() override;

private:
    std::optional<std::chrono::nanoseconds> resolution_;
};

/// One side of a comparison: a callable that runs a kernel once, and the
/// buffer it writes.
struct VariantRunner {
    std::function<void()> run;
    std::span<const float> output;
};

struct Measurement {
    Verification verification;
    std::vector<TimingSample> plain_samples;
    std::vector<TimingSample> vector_samples;
    /// Sum of both outputs after every timed execution.
    double checksum = 0.0;
    std::vector<std::string> warnings;
};

/// Runs the measurement protocol on two arbitrary kernels:
///   1. one untimed warmup execution of each variant;
///   2. verification of the two outputs, throwing VerificationFailure if
///      they disagree beyond `tolerance`;
///   3. `scheme.repeats` timed executions of each variant in the scheme's
///      order. Only the kernel call sits between the two timestamps; the
///      checksum is folded in afterwards.
///
/// Throws PreconditionError when scheme.repeats < 2.
Measurement measure(const VariantRunner& plain, const VariantRunner& vector, const SchedulingScheme& scheme,
                    double tolerance, TimeSource& clock, int scenario_id = 0);

struct ScenarioResult {
    int scenario_id = 0;
    std::size_t length = 0;
    std::uint64_t seed = 0;
    SchedulingScheme scheme;
    RunStats plain_stats;
    RunStats vector_stats;
    RatioResult ratio;
    Verification verification;
    std::vector<TimingSample> plain_samples;
    std::vector<TimingSample> vector_samples;
    double checksum = 0.0;
    /// The vector variant calls scalar math per lane for some operations.
    bool sequence_emulated = false;
    std::vector<std::string> warnings;

    friend bool operator==(const ScenarioResult&, const ScenarioResult&) = default;
};

/// Assembles a result from a finished measurement. The ratio is always
/// ratio(summarise(vector), summarise(plain)).
ScenarioResult assemble(const ScenarioSpec& spec, std::size_t length, std::uint64_t seed,
                        const SchedulingScheme& scheme, Measurement measurement);

/// Generates the workload once, then measures the scenario's plain and
/// vector kernels on it.
ScenarioResult run_scenario(const ScenarioSpec& spec, std::size_t length, std::uint64_t seed,
                            const SchedulingScheme& scheme, const Tolerances& tolerances, TimeSource& clock);
ScenarioResult run_scenario(const ScenarioSpec& spec, std::size_t length, std::uint64_t seed,
                            const SchedulingScheme& scheme, const Tolerances& tolerances);

/// One untimed equivalence check.
struct VerifyCase {
    int scenario_id = 0;
    std::size_t length = 0;
    std::uint64_t seed = 0;
    /// False when the length is below the scenario's minimum; no kernel ran.
    bool applicable = true;
    Verification verification;
};

/// Checks every (scenario, length, seed) combination without timing. Cases
/// are independent and run in parallel when OpenMP is available.
std::vector<VerifyCase> verify_sweep(std::span<const int> scenario_ids, std::span<const std::size_t> lengths,
                                     std::span<const std::uint64_t> seeds, const Tolerances& tolerances,
                                     Backend backend = Backend::active);

}  // namespace simdbench
