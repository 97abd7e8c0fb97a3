#include "simdbench/configmeta.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <thread>

#if defined(__unix__) || defined(__APPLE__)
#include <sys/utsname.h>
#include <unistd.h>
#endif
#if defined(__APPLE__)
#include <sys/sysctl.h>
#include <sys/types.h>
#endif

#ifndef SIMDBENCH_OPT_LEVEL
#define SIMDBENCH_OPT_LEVEL "unknown"
#endif

namespace simdbench {

std::string_view to_string(OsFamily os) noexcept {
    switch (os) {
        case OsFamily::Linux: return "linux";
        case OsFamily::MacOS: return "macos";
        case OsFamily::Windows: return "windows";
        case OsFamily::Other: return "other";
    }
    return "other";
}

std::string_view to_string(Architecture arch) noexcept {
    switch (arch) {
        case Architecture::X86_64: return "x86-64";
        case Architecture::Arm64: return "arm64";
        case Architecture::Other: return "other";
    }
    return "other";
}

std::optional<OsFamily> parse_os_family(std::string_view text) noexcept {
    for (auto os : {OsFamily::Linux, OsFamily::MacOS, OsFamily::Windows, OsFamily::Other}) {
        if (to_string(os) == text) return os;
    }
    return std::nullopt;
}

std::optional<Architecture> parse_architecture(std::string_view text) noexcept {
    for (auto arch : {Architecture::X86_64, Architecture::Arm64, Architecture::Other}) {
        if (to_string(arch) == text) return arch;
    }
    return std::nullopt;
}

OptLevel parse_opt_level(std::string_view text) {
    std::string_view core = text;
    if (!core.empty() && (core.front() == '-' || core.front() == '/')) core.remove_prefix(1);
    if (core == "O0" || core == "Od") return {OptLevel::Kind::O0, std::string(core)};
    if (core == "O1") return {OptLevel::Kind::O1, std::string(core)};
    if (core == "O2") return {OptLevel::Kind::O2, std::string(core)};
    if (core == "O3") return {OptLevel::Kind::O3, std::string(core)};
    return {OptLevel::Kind::Other, std::string(core.empty() ? "unknown" : core)};
}

std::string derive_config_name(OsFamily os, std::string_view toolchain_name) {
    std::string name;
    switch (os) {
        case OsFamily::Linux: name = "lin_"; break;
        case OsFamily::MacOS: name = "mac_"; break;
        case OsFamily::Windows: name = "win_"; break;
        case OsFamily::Other: name = "oth_"; break;
    }
    for (const char ch : toolchain_name) {
        name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    return name;
}

OptLevel build_opt_level() { return parse_opt_level(SIMDBENCH_OPT_LEVEL); }

namespace {

OsFamily host_os() {
#if defined(_WIN32)
    return OsFamily::Windows;
#elif defined(__APPLE__)
    return OsFamily::MacOS;
#elif defined(__linux__)
    return OsFamily::Linux;
#else
    return OsFamily::Other;
#endif
}

Architecture host_arch() {
#if defined(__x86_64__) || defined(_M_X64)
    return Architecture::X86_64;
#elif defined(__aarch64__) || defined(_M_ARM64)
    return Architecture::Arm64;
#else
    return Architecture::Other;
#endif
}

void toolchain(std::string& name, std::string& version) {
#if defined(__INTEL_LLVM_COMPILER)
    name = "Intel";
    version = std::to_string(__INTEL_LLVM_COMPILER);
#elif defined(__INTEL_COMPILER)
    name = "Intel";
    version = std::to_string(__INTEL_COMPILER);
#elif defined(__clang__)
    name = "Clang";
    version = __clang_version__;
#elif defined(_MSC_VER)
    name = "MSVC";
    version = std::to_string(_MSC_FULL_VER);
#elif defined(__GNUC__)
    name = "GCC";
    version = __VERSION__;
#else
    name = "unknown";
    version = "unknown";
#endif
}

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::string os_version() {
#if defined(__unix__) || defined(__APPLE__)
    utsname info{};
    if (uname(&info) == 0) return std::string(info.sysname) + " " + info.release;
#endif
    return "unknown";
}

std::string cpu_model() {
#if defined(__APPLE__)
    char buf[256] = {};
    std::size_t size = sizeof(buf);
    if (sysctlbyname("machdep.cpu.brand_string", buf, &size, nullptr, 0) == 0 && buf[0] != '\0') {
        return buf;
    }
#elif defined(__linux__)
    std::ifstream in("/proc/cpuinfo");
    std::string line;
    while (std::getline(in, line)) {
        for (const std::string_view key : {"model name", "Hardware", "Processor"}) {
            if (line.rfind(key, 0) == 0) {
                const auto colon = line.find(':');
                if (colon != std::string::npos) {
                    auto value = trim(line.substr(colon + 1));
                    if (!value.empty()) return value;
                }
            }
        }
    }
#endif
    return "unknown";
}

std::optional<std::uint64_t> memory_bytes() {
#if defined(__APPLE__)
    std::uint64_t mem = 0;
    std::size_t size = sizeof(mem);
    if (sysctlbyname("hw.memsize", &mem, &size, nullptr, 0) == 0 && mem > 0) return mem;
#elif defined(__unix__)
    const long pages = sysconf(_SC_PHYS_PAGES);
    const long page_size = sysconf(_SC_PAGE_SIZE);
    if (pages > 0 && page_size > 0) {
        return static_cast<std::uint64_t>(pages) * static_cast<std::uint64_t>(page_size);
    }
#endif
    return std::nullopt;
}

}  // namespace

ConfigMetadata detect(std::optional<OptLevel> opt_level_override) {
    ConfigMetadata meta;
    meta.os_family = host_os();
    meta.os_version = os_version();
    meta.architecture = host_arch();
    meta.cpu_model = cpu_model();
    if (const unsigned cores = std::thread::hardware_concurrency(); cores > 0) meta.core_count = cores;
    meta.memory_bytes = memory_bytes();
    toolchain(meta.toolchain_name, meta.toolchain_version);
    meta.opt_level = opt_level_override ? *opt_level_override : build_opt_level();
    meta.config_name = derive_config_name(meta.os_family, meta.toolchain_name);
    return meta;
}

}  // namespace simdbench
