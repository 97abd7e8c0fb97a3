#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "simdbench/datagen.hpp"

namespace simdbench {

enum class ConditionalKind { none, index, data, nested_data };

std::string_view to_string(ConditionalKind kind) noexcept;

/// One of the eight benchmark kernels. Instances exist only in the
/// catalogue; the flags are properties of the kernel, not settings.
struct ScenarioSpec {
    int id;
    std::string_view description;
    bool uses_offsets;
    bool uses_transcendentals;
    ConditionalKind conditional_kind;
};

enum class Variant { plain, vector };

std::string_view to_string(Variant variant) noexcept;

/// Which lane backend the vector variant runs on. `emulated` is the
/// array-based fallback, always compiled in.
enum class Backend { active, emulated };

/// All eight scenarios, ordered by id.
std::span<const ScenarioSpec> catalogue() noexcept;

/// Looks up a scenario; throws PreconditionError for ids outside 1..8.
const ScenarioSpec& scenario(int id);

/// Smallest length the scenario accepts (3 for the offset scenarios).
std::size_t min_length(const ScenarioSpec& spec) noexcept;

/// True when the vector variant evaluates some math function one lane at a
/// time because the backend has no native instruction for it.
bool sequence_emulated(const ScenarioSpec& spec, Backend backend = Backend::active) noexcept;

/// Read-only kernel inputs. All spans must have the same length as the output.
struct KernelInputs {
    std::span<const float> a;
    std::span<const float> b;
    std::span<const float> c;
};

/// Throws PreconditionError if the inputs and output cannot be processed by
/// `spec` (length mismatch, zero length, or too short for the offsets).
void check_preconditions(const ScenarioSpec& spec, const KernelInputs& in, std::span<const float> out);

/// Scalar reference kernel. Writes every element of `out`.
void run_plain(const ScenarioSpec& spec, const KernelInputs& in, std::span<float> out);

/// 8-lane kernel: load / compute / store over full registers, then a scalar
/// tail loop identical to the plain body. Conditionals are evaluated for
/// every lane and merged with masks.
void run_vector(const ScenarioSpec& spec, const KernelInputs& in, std::span<float> out,
                Backend backend = Backend::active);

/// Runs the plain kernel into `data.d_plain`.
void run_plain(const ScenarioSpec& spec, WorkloadData& data);

/// Runs the vector kernel into `data.d_vector`.
void run_vector(const ScenarioSpec& spec, WorkloadData& data, Backend backend = Backend::active);

KernelInputs inputs_of(const WorkloadData& data) noexcept;

}  // namespace simdbench
