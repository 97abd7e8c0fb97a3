#include "simdbench/scenarios.hpp"

#include <array>
#include <string>

#include "simdbench/error.hpp"
#include "simdbench/lanes.hpp"

namespace simdbench {

namespace {

constexpr std::array<ScenarioSpec, 8> kCatalogue{{
    {1, "Basic operations.", false, false, ConditionalKind::none},
    {2, "Basic operations with index offset.", true, false, ConditionalKind::none},
    {3, "Advanced operations.", false, true, ConditionalKind::none},
    {4, "Advanced operations with index offset.", true, true, ConditionalKind::none},
    {5, "Simple condition on index with basic operations.", false, false, ConditionalKind::index},
    {6, "Simple condition on random data with basic operations.", false, false, ConditionalKind::data},
    {7, "Simple condition on random data with sub-branches and basic operations.", false, false,
     ConditionalKind::nested_data},
    {8, "Simple condition on random data with sub-branches and advanced operations.", false, true,
     ConditionalKind::nested_data},
}};

template <class L>
bool emulates_math(int id) {
    switch (id) {
        case 3:
        case 4: return !(L::native_sqrt && L::native_abs && L::native_cos && L::native_pow);
        case 8: return !(L::native_sqrt && L::native_pow && L::native_cos && L::native_ceil);
        default: return false;
    }
}

}  // namespace

std::string_view to_string(ConditionalKind kind) noexcept {
    switch (kind) {
        case ConditionalKind::none: return "none";
        case ConditionalKind::index: return "index";
        case ConditionalKind::data: return "data";
        case ConditionalKind::nested_data: return "nested-data";
    }
    return "none";
}

std::string_view to_string(Variant variant) noexcept {
    return variant == Variant::plain ? "plain" : "vector";
}

std::span<const ScenarioSpec> catalogue() noexcept { return kCatalogue; }

const ScenarioSpec& scenario(int id) {
    if (id < 1 || id > static_cast<int>(kCatalogue.size())) {
        throw PreconditionError("unknown scenario id " + std::to_string(id) + " (expected 1..8)");
    }
    return kCatalogue[static_cast<std::size_t>(id - 1)];
}

std::size_t min_length(const ScenarioSpec& spec) noexcept { return spec.uses_offsets ? 3 : 1; }

bool sequence_emulated(const ScenarioSpec& spec, Backend backend) noexcept {
    return backend == Backend::emulated ? emulates_math<lanes::Emulated>(spec.id)
                                        : emulates_math<lanes::Active>(spec.id);
}

void check_preconditions(const ScenarioSpec& spec, const KernelInputs& in, std::span<const float> out) {
    const std::size_t n = out.size();
    if (in.a.size() != n || in.b.size() != n || in.c.size() != n) {
        throw PreconditionError("scenario " + std::to_string(spec.id) +
                                ": input and output arrays differ in length");
    }
    if (n < min_length(spec)) {
        throw PreconditionError("scenario " + std::to_string(spec.id) + " needs at least " +
                                std::to_string(min_length(spec)) + " elements, got " + std::to_string(n));
    }
}

KernelInputs inputs_of(const WorkloadData& data) noexcept { return {data.a, data.b, data.c}; }

void run_plain(const ScenarioSpec& spec, WorkloadData& data) {
    run_plain(spec, inputs_of(data), data.d_plain);
}

void run_vector(const ScenarioSpec& spec, WorkloadData& data, Backend backend) {
    run_vector(spec, inputs_of(data), data.d_vector, backend);
}

}  // namespace simdbench
