#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace simdbench {

enum class OsFamily { Linux, MacOS, Windows, Other };
enum class Architecture { X86_64, Arm64, Other };

std::string_view to_string(OsFamily os) noexcept;
std::string_view to_string(Architecture arch) noexcept;
std::optional<OsFamily> parse_os_family(std::string_view text) noexcept;
std::optional<Architecture> parse_architecture(std::string_view text) noexcept;

/// Compiler optimisation level. MSVC's "Od" is treated as O0 but keeps its
/// spelling in `label`.
struct OptLevel {
    enum class Kind { O0, O1, O2, O3, Other };
    Kind kind = Kind::Other;
    std::string label;

    friend bool operator==(const OptLevel&, const OptLevel&) = default;
};

/// Parses "O0".."O3", "Od" (and a leading '-' or '/'); anything else is Other.
OptLevel parse_opt_level(std::string_view text);

/// Host and build description attached to every report.
struct ConfigMetadata {
    OsFamily os_family = OsFamily::Other;
    std::string os_version = "unknown";
    Architecture architecture = Architecture::Other;
    std::string cpu_model = "unknown";
    std::optional<unsigned> core_count;         ///< nullopt serialises as "unknown"
    std::optional<std::uint64_t> memory_bytes;  ///< nullopt serialises as "unknown"
    std::string toolchain_name = "unknown";
    std::string toolchain_version = "unknown";
    OptLevel opt_level;
    std::string config_name;

    friend bool operator==(const ConfigMetadata&, const ConfigMetadata&) = default;
};

/// "<os prefix>_<lowercased toolchain>", e.g. "lin_gcc" or "mac_clang".
std::string derive_config_name(OsFamily os, std::string_view toolchain_name);

/// Optimisation level this binary was built with, as recorded by the build.
OptLevel build_opt_level();

/// Best-effort description of the host and of the compiler that built this
/// binary. Never fails; unknown fields read "unknown".
ConfigMetadata detect(std::optional<OptLevel> opt_level_override = std::nullopt);

}  // namespace simdbench
