#include "simdbench/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace simdbench {

std::string_view to_string(Scheme scheme) noexcept {
    return scheme == Scheme::interleaved ? "interleaved" : "blocked";
}

std::optional<Scheme> parse_scheme(std::string_view text) noexcept {
    if (text == "interleaved") return Scheme::interleaved;
    if (text == "blocked") return Scheme::blocked;
    return std::nullopt;
}

double Tolerances::for_scenario(const ScenarioSpec& spec) const noexcept {
    if (override_all) return *override_all;
    return spec.uses_transcendentals ? transcendental : basic;
}

Verification verify(std::span<const float> plain, std::span<const float> vector, double tolerance) {
    if (plain.size() != vector.size()) {
        throw PreconditionError("verify: output buffers differ in length (" + std::to_string(plain.size()) +
                                " vs " + std::to_string(vector.size()) + ")");
    }
    Verification v;
    v.tolerance = tolerance;
    v.compared = plain.size();
    bool have_failure = false;
    for (std::size_t i = 0; i < plain.size(); ++i) {
        const float p = plain[i];
        const float q = vector[i];
        if (p == q) continue;
        const double abs_diff = std::abs(static_cast<double>(p) - static_cast<double>(q));
        const double scale = std::max(std::abs(static_cast<double>(p)), std::abs(static_cast<double>(q)));
        const double rel_diff = scale > 0.0 ? abs_diff / scale : abs_diff;
        const bool ok = abs_diff <= tolerance * scale;  // false for NaN
        if (std::isnan(abs_diff)) {
            v.max_abs_diff = abs_diff;
            v.max_rel_diff = abs_diff;
        } else {
            v.max_abs_diff = std::max(v.max_abs_diff, abs_diff);
        }
        if (!ok && !have_failure) {
            have_failure = true;
            v.passed = false;
            v.worst_index = i;
            v.worst_plain = p;
            v.worst_vector = q;
        }
        if (rel_diff > v.max_rel_diff) {
            v.max_rel_diff = rel_diff;
            if (!have_failure) {
                v.worst_index = i;
                v.worst_plain = p;
                v.worst_vector = q;
            }
        }
    }
    return v;
}

Verification verify(const ScenarioSpec&, const WorkloadData& data, double tolerance) {
    return verify(data.d_plain, data.d_vector, tolerance);
}

namespace {

std::string describe_failure(int scenario_id, const Verification& v) {
    std::ostringstream os;
    os << "scenario " << scenario_id << ": plain and vector outputs differ at index " << v.worst_index
       << " (plain " << v.worst_plain << ", vector " << v.worst_vector << "; max relative difference "
       << v.max_rel_diff << " > tolerance " << v.tolerance << ")";
    return os.str();
}

double fold(std::span<const float> output) {
    return std::accumulate(output.begin(), output.end(), 0.0);
}

}  // namespace

VerificationFailure::VerificationFailure(int scenario_id, Verification record)
    : Error(describe_failure(scenario_id, record)), scenario_id_(scenario_id), record_(record) {}

std::chrono::nanoseconds SteadyTimeSource::now() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now().time_since_epoch());
}

std::chrono::nanoseconds SteadyTimeSource::resolution() {
    if (!resolution_) {
        auto best = std::chrono::nanoseconds::max();
        for (int probe = 0; probe < 64; ++probe) {
            const auto start = now();
            auto next = start;
            for (int spin = 0; spin < 1'000'000 && next == start; ++spin) next = now();
            if (next > start) best = std::min(best, next - start);
        }
        resolution_ = best == std::chrono::nanoseconds::max() ? std::chrono::nanoseconds{0} : best;
    }
    return *resolution_;
}

Measurement measure(const VariantRunner& plain, const VariantRunner& vector, const SchedulingScheme& scheme,
                    double tolerance, TimeSource& clock, int scenario_id) {
    if (scheme.repeats < 2) {
        throw PreconditionError("at least 2 repeats are needed for a standard deviation, got " +
                                std::to_string(scheme.repeats));
    }

    plain.run();
    vector.run();

    Measurement m;
    m.verification = verify(plain.output, vector.output, tolerance);
    if (!m.verification.passed) {
        throw VerificationFailure(scenario_id, m.verification);
    }

    const auto repeats = static_cast<std::size_t>(scheme.repeats);
    m.plain_samples.reserve(repeats);
    m.vector_samples.reserve(repeats);
    bool clamped = false;

    auto timed = [&](const VariantRunner& runner, std::vector<TimingSample>& samples) {
        const auto start = clock.now();
        runner.run();
        const auto stop = clock.now();
        auto elapsed = stop - start;
        if (elapsed <= std::chrono::nanoseconds::zero()) {
            elapsed = std::chrono::nanoseconds{1};
            clamped = true;
        }
        samples.push_back({elapsed});
        m.checksum += fold(runner.output);
    };

    if (scheme.tag == Scheme::interleaved) {
        for (std::size_t r = 0; r < repeats; ++r) {
            timed(plain, m.plain_samples);
            timed(vector, m.vector_samples);
        }
    } else {
        for (std::size_t r = 0; r < repeats; ++r) timed(plain, m.plain_samples);
        for (std::size_t r = 0; r < repeats; ++r) timed(vector, m.vector_samples);
    }

    if (clamped) {
        m.warnings.emplace_back("some executions were shorter than one clock tick; recorded as 1 ns");
    }
    const auto resolution = clock.resolution();
    auto fastest = std::chrono::nanoseconds::max();
    for (const auto& s : m.plain_samples) fastest = std::min(fastest, s.duration);
    for (const auto& s : m.vector_samples) fastest = std::min(fastest, s.duration);
    if (resolution.count() > 0 && resolution * 100 > fastest) {
        m.warnings.push_back("timer resolution of " + std::to_string(resolution.count()) +
                             " ns is coarser than 1% of the fastest execution (" +
                             std::to_string(fastest.count()) + " ns)");
    }
    return m;
}

ScenarioResult assemble(const ScenarioSpec& spec, std::size_t length, std::uint64_t seed,
                        const SchedulingScheme& scheme, Measurement measurement) {
    ScenarioResult r;
    r.scenario_id = spec.id;
    r.length = length;
    r.seed = seed;
    r.scheme = scheme;
    r.plain_stats = summarise(measurement.plain_samples);
    r.vector_stats = summarise(measurement.vector_samples);
    r.ratio = ratio(r.vector_stats, r.plain_stats);
    r.verification = measurement.verification;
    r.plain_samples = std::move(measurement.plain_samples);
    r.vector_samples = std::move(measurement.vector_samples);
    r.checksum = measurement.checksum;
    r.sequence_emulated = sequence_emulated(spec);
    r.warnings = std::move(measurement.warnings);
    return r;
}

ScenarioResult run_scenario(const ScenarioSpec& spec, std::size_t length, std::uint64_t seed,
                            const SchedulingScheme& scheme, const Tolerances& tolerances, TimeSource& clock) {
    if (scheme.repeats < 2) {
        throw PreconditionError("at least 2 repeats are needed for a standard deviation, got " +
                                std::to_string(scheme.repeats));
    }
    if (length < min_length(spec)) {
        throw PreconditionError("scenario " + std::to_string(spec.id) + " needs at least " +
                                std::to_string(min_length(spec)) + " elements, got " + std::to_string(length));
    }
    WorkloadData data = generate(length, seed);
    const VariantRunner plain{[&] { run_plain(spec, data); }, data.d_plain};
    const VariantRunner vector{[&] { run_vector(spec, data); }, data.d_vector};
    auto m = measure(plain, vector, scheme, tolerances.for_scenario(spec), clock, spec.id);
    return assemble(spec, length, seed, scheme, std::move(m));
}

ScenarioResult run_scenario(const ScenarioSpec& spec, std::size_t length, std::uint64_t seed,
                            const SchedulingScheme& scheme, const Tolerances& tolerances) {
    SteadyTimeSource clock;
    return run_scenario(spec, length, seed, scheme, tolerances, clock);
}

std::vector<VerifyCase> verify_sweep(std::span<const int> scenario_ids, std::span<const std::size_t> lengths,
                                     std::span<const std::uint64_t> seeds, const Tolerances& tolerances,
                                     Backend backend) {
    // Reject bad lengths here; nothing may throw inside the parallel loop.
    for (const auto length : lengths) {
        if (length == 0 || length > kMaxLength) {
            throw SizingError("invalid verification length " + std::to_string(length));
        }
    }
    std::vector<VerifyCase> cases;
    cases.reserve(scenario_ids.size() * lengths.size() * seeds.size());
    for (const int id : scenario_ids) {
        const auto& spec = scenario(id);
        for (const auto length : lengths) {
            for (const auto seed : seeds) {
                VerifyCase vc;
                vc.scenario_id = id;
                vc.length = length;
                vc.seed = seed;
                vc.applicable = length >= min_length(spec);
                cases.push_back(vc);
            }
        }
    }

    const auto count = static_cast<std::ptrdiff_t>(cases.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        auto& vc = cases[static_cast<std::size_t>(k)];
        if (!vc.applicable) continue;
        const auto& spec = scenario(vc.scenario_id);
        WorkloadData data = generate(vc.length, vc.seed);
        run_plain(spec, data);
        run_vector(spec, data, backend);
        vc.verification = verify(spec, data, tolerances.for_scenario(spec));
    }
    return cases;
}

}  // namespace simdbench
