#pragma once

#include <cstddef>
#include <cstdint>

namespace simdbench {

/// Elements per array in a default run (Niter = 5e7).
inline constexpr std::size_t kDefaultLength = 50'000'000;

/// Timed executions per variant in a default run.
inline constexpr int kDefaultRepeats = 50;

/// Seed used when none is given on the command line.
inline constexpr std::uint64_t kDefaultSeed = 20250101;

/// Default verification tolerances (relative). Scenarios built only from
/// IEEE basic operations must match bit for bit.
inline constexpr double kBasicTolerance = 0.0;
inline constexpr double kTranscendentalTolerance = 1e-5;

}  // namespace simdbench
