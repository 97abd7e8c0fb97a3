#pragma once

#include <chrono>
#include <cstddef>
#include <span>

namespace simdbench {

/// Wall-clock duration of one timed kernel execution (always positive).
struct TimingSample {
    std::chrono::nanoseconds duration;

    friend bool operator==(const TimingSample&, const TimingSample&) = default;
};

/// Mean and sample (n - 1) standard deviation of a set of timings, in ns.
struct RunStats {
    double mean_ns = 0.0;
    double std_dev_ns = 0.0;
    std::size_t count = 0;

    friend bool operator==(const RunStats&, const RunStats&) = default;
};

/// Execution time ratio of the vector variant over the plain one, and its
/// standard deviation assuming the two timings are uncorrelated. Both are
/// fractions (1.0 == 100 %).
struct RatioResult {
    double tau = 0.0;
    double sigma_tau = 0.0;

    friend bool operator==(const RatioResult&, const RatioResult&) = default;
};

/// Throws StatsError on fewer than two samples.
RunStats summarise(std::span<const TimingSample> samples);
RunStats summarise(std::span<const double> samples_ns);

/// tau = intrinsic.mean / plain.mean and
/// sigma_tau = |tau| * sqrt((sI / TI)^2 + (sP / TP)^2).
/// Throws StatsError when either mean is not positive.
RatioResult ratio(const RunStats& intrinsic, const RunStats& plain);

}  // namespace simdbench
