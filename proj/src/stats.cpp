#include "simdbench/stats.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "simdbench/error.hpp"

namespace simdbench {

RunStats summarise(std::span<const double> samples_ns) {
    if (samples_ns.size() < 2) {
        throw StatsError("summarise needs at least 2 samples, got " + std::to_string(samples_ns.size()));
    }
    // Welford's online update.
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t n = 0;
    for (const double x : samples_ns) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }
    return {mean, std::sqrt(m2 / static_cast<double>(n - 1)), n};
}

RunStats summarise(std::span<const TimingSample> samples) {
    std::vector<double> ns;
    ns.reserve(samples.size());
    for (const auto& s : samples) ns.push_back(static_cast<double>(s.duration.count()));
    return summarise(std::span<const double>(ns));
}

RatioResult ratio(const RunStats& intrinsic, const RunStats& plain) {
    if (!(intrinsic.mean_ns > 0.0) || !(plain.mean_ns > 0.0)) {
        throw StatsError("ratio needs positive means");
    }
    const double tau = intrinsic.mean_ns / plain.mean_ns;
    const double ri = intrinsic.std_dev_ns / intrinsic.mean_ns;
    const double rp = plain.std_dev_ns / plain.mean_ns;
    return {tau, std::abs(tau) * std::sqrt(ri * ri + rp * rp)};
}

}  // namespace simdbench
