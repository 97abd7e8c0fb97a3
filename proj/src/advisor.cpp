#include "simdbench/advisor.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace simdbench {

namespace {

std::string lower(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (const char ch : text) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    return out;
}

constexpr std::array<std::pair<std::string_view, Toolchain>, 17> kAliases{{
    {"icc", Toolchain::ICC},
    {"icpc", Toolchain::ICC},
    {"icx", Toolchain::ICC},
    {"icpx", Toolchain::ICC},
    {"intel", Toolchain::ICC},
    {"msvc", Toolchain::MSVC},
    {"msvc++", Toolchain::MSVC},
    {"cl", Toolchain::MSVC},
    {"cl.exe", Toolchain::MSVC},
    {"gcc", Toolchain::GCC},
    {"g++", Toolchain::GCC},
    {"gnu", Toolchain::GCC},
    {"mingw", Toolchain::GCC},
    {"clang", Toolchain::Clang},
    {"clang++", Toolchain::Clang},
    {"apple-clang", Toolchain::Clang},
    {"appleclang", Toolchain::Clang},
}};

Recommendation use(Toolchain t, IntrinsicsPolicy policy, std::string rationale) {
    return {t, policy, std::move(rationale)};
}

Recommendation unknown(std::string rationale) {
    return {std::nullopt, IntrinsicsPolicy::unknown, std::move(rationale)};
}

}  // namespace

std::string_view to_string(DeviceClass device) noexcept {
    switch (device) {
        case DeviceClass::windows_x86_64: return "windows-x86-64";
        case DeviceClass::linux_x86_64: return "linux-x86-64";
        case DeviceClass::macos_arm64: return "macos-arm64";
        case DeviceClass::other: return "other";
    }
    return "other";
}

std::string_view to_string(Toolchain toolchain) noexcept {
    switch (toolchain) {
        case Toolchain::ICC: return "ICC";
        case Toolchain::MSVC: return "MSVC++";
        case Toolchain::GCC: return "GCC";
        case Toolchain::Clang: return "Clang";
    }
    return "unknown";
}

std::string_view to_string(IntrinsicsPolicy policy) noexcept {
    switch (policy) {
        case IntrinsicsPolicy::none: return "none";
        case IntrinsicsPolicy::wherever_needed: return "wherever-needed";
        case IntrinsicsPolicy::condition_branches_only: return "condition-branches-only";
        case IntrinsicsPolicy::unknown: return "unknown";
    }
    return "unknown";
}

std::optional<DeviceClass> parse_device(std::string_view text) {
    const auto t = lower(text);
    if (t == "windows" || t == "windows-x86-64" || t == "win") return DeviceClass::windows_x86_64;
    if (t == "linux" || t == "linux-x86-64" || t == "lin") return DeviceClass::linux_x86_64;
    if (t == "macos" || t == "macos-arm64" || t == "mac") return DeviceClass::macos_arm64;
    if (t == "other") return DeviceClass::other;
    return std::nullopt;
}

std::optional<Toolchain> parse_toolchain(std::string_view text) {
    const auto t = lower(text);
    for (const auto& [alias, toolchain] : kAliases) {
        if (alias == t) return toolchain;
    }
    return std::nullopt;
}

std::string Recommendation::message() const {
    if (!toolchain) return "unknown";
    std::string text = "Use " + std::string(to_string(*toolchain)) + ", ";
    switch (intrinsics_policy) {
        case IntrinsicsPolicy::none: text += "without intrinsic."; break;
        case IntrinsicsPolicy::wherever_needed: text += "with intrinsics wherever it is needed."; break;
        case IntrinsicsPolicy::condition_branches_only: text += "with intrinsics for condition branches."; break;
        case IntrinsicsPolicy::unknown: text += "unknown."; break;
    }
    return text;
}

Recommendation advise(DeviceClass device, const std::set<Toolchain>& available) {
    const auto has = [&](Toolchain t) { return available.count(t) > 0; };
    switch (device) {
        case DeviceClass::windows_x86_64:
            if (has(Toolchain::ICC)) {
                return use(Toolchain::ICC, IntrinsicsPolicy::none, "Windows (x86-64): ICC available");
            }
            if (has(Toolchain::MSVC)) {
                return use(Toolchain::MSVC, IntrinsicsPolicy::wherever_needed,
                           "Windows (x86-64): ICC not available, MSVC++ available");
            }
            if (has(Toolchain::GCC)) {
                return use(Toolchain::GCC, IntrinsicsPolicy::condition_branches_only,
                           "Windows (x86-64): ICC and MSVC++ not available, GCC available");
            }
            return unknown("Windows (x86-64): none of ICC, MSVC++, GCC available");
        case DeviceClass::linux_x86_64:
            if (has(Toolchain::GCC)) {
                return use(Toolchain::GCC, IntrinsicsPolicy::none, "Linux (x86-64): GCC available");
            }
            return unknown("Linux (x86-64): GCC not available");
        case DeviceClass::macos_arm64:
            if (has(Toolchain::Clang)) {
                return use(Toolchain::Clang, IntrinsicsPolicy::none, "macOS (ARM64): Clang available");
            }
            if (has(Toolchain::GCC)) {
                return use(Toolchain::GCC, IntrinsicsPolicy::condition_branches_only,
                           "macOS (ARM64): Clang not available, GCC available");
            }
            return unknown("macOS (ARM64): neither Clang nor GCC available");
        case DeviceClass::other:
            break;
    }
    return unknown("other device: not covered by the benchmark");
}

}  // namespace simdbench
