#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace simdbench {

/// Input and output arrays shared by every scenario.
///
/// `a`, `b` and `c` are read-only inputs filled uniformly in [1, 10]. The two
/// output buffers are distinct so the plain and vector variants never write
/// to the same memory.
struct WorkloadData {
    std::size_t length = 0;
    std::uint64_t seed = 0;
    std::vector<float> a;
    std::vector<float> b;
    std::vector<float> c;
    std::vector<float> d_plain;
    std::vector<float> d_vector;

    friend bool operator==(const WorkloadData&, const WorkloadData&) = default;
};

/// Lower and upper bound of every generated input value.
inline constexpr float kFillMin = 1.0f;
inline constexpr float kFillMax = 10.0f;

/// Largest accepted length. Five arrays of this size already need 80 GiB.
inline constexpr std::size_t kMaxLength = std::size_t{1} << 32;

/// Name of the pseudo-random engine, recorded in reports.
inline constexpr std::string_view kGeneratorName = "mt19937_64";

/// Exact mapping from an engine output `x` to a fill value, recorded in
/// reports so the arrays can be reproduced independently.
inline constexpr std::string_view kGeneratorMapping =
    "u = x >> 32; value = float(1.0 + 9.0 * (double(u) / 4294967296.0)); "
    "arrays drawn in order a, b, c";

/// Maps one 32-bit draw onto [1, 10].
float fill_value(std::uint32_t draw) noexcept;

/// Builds a workload of `length` elements from `seed`. Inputs are drawn from
/// a single mt19937_64 stream (all of a, then b, then c); outputs are zeroed.
///
/// Throws SizingError when `length` is zero, exceeds kMaxLength or cannot be
/// allocated.
WorkloadData generate(std::size_t length, std::uint64_t seed);

}  // namespace simdbench
