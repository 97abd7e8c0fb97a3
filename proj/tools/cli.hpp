#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "simdbench/defaults.hpp"
#include "simdbench/harness.hpp"

namespace simdbench::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Settings of the `run` subcommand. Default-constructed values are the
/// command-line defaults.
struct RunOptions {
    std::vector<int> scenarios{1, 2, 3, 4, 5, 6, 7, 8};
    std::size_t length = kDefaultLength;
    SchedulingScheme scheme{Scheme::interleaved, kDefaultRepeats};
    std::uint64_t seed = kDefaultSeed;
    Tolerances tolerances;
    std::optional<std::string> opt_level;
    std::string report_path = "simdbench_report.json";
    std::optional<std::string> csv_path;
};

struct VerifyOptions {
    std::vector<int> scenarios{1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<std::size_t> lengths{1, 7, 8, 9, 64, 1000, 12345};
    std::vector<std::uint64_t> seeds{kDefaultSeed, 1, 2, 3, 4};
    Tolerances tolerances;
    Backend backend = Backend::active;
};

/// Entry point shared by the executable and the tests.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simdbench::cli
