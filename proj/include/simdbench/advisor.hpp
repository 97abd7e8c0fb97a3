#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace simdbench {

enum class DeviceClass { windows_x86_64, linux_x86_64, macos_arm64, other };

/// Compiler families the decision chart asks about.
enum class Toolchain { ICC, MSVC, GCC, Clang };

enum class IntrinsicsPolicy { none, wherever_needed, condition_branches_only, unknown };

std::string_view to_string(DeviceClass device) noexcept;
std::string_view to_string(Toolchain toolchain) noexcept;
std::string_view to_string(IntrinsicsPolicy policy) noexcept;

/// Accepts "windows", "linux", "macos", "other" and the full tags
/// ("windows-x86-64", ...), case-insensitively.
std::optional<DeviceClass> parse_device(std::string_view text);

/// Maps a compiler name or binary onto its family, case-insensitively
/// ("icx" -> ICC, "cl" -> MSVC, "g++" -> GCC, "apple-clang" -> Clang, ...).
std::optional<Toolchain> parse_toolchain(std::string_view text);

struct Recommendation {
    std::optional<Toolchain> toolchain;  ///< empty means "unknown"
    IntrinsicsPolicy intrinsics_policy = IntrinsicsPolicy::unknown;
    std::string rationale;

    /// Terminal text of the chart, e.g. "Use ICC, without intrinsic.", or
    /// "unknown".
    std::string message() const;

    friend bool operator==(const Recommendation&, const Recommendation&) = default;
};

/// Walks the toolchain / intrinsics decision chart for a device, given the
/// toolchains the user can use. Advice only; total over all inputs.
Recommendation advise(DeviceClass device, const std::set<Toolchain>& available);

}  // namespace simdbench
