#include "simdbench/datagen.hpp"

#include <new>
#include <random>
#include <string>

#include "simdbench/error.hpp"

namespace simdbench {

float fill_value(std::uint32_t draw) noexcept {
    return static_cast<float>(1.0 + 9.0 * (static_cast<double>(draw) / 4294967296.0));
}

namespace {

void fill(std::vector<float>& out, std::mt19937_64& engine) {
    for (auto& v : out) {
        v = fill_value(static_cast<std::uint32_t>(engine() >> 32));
    }
}

}  // namespace

WorkloadData generate(std::size_t length, std::uint64_t seed) {
    if (length == 0) {
        throw SizingError("workload length must be at least 1");
    }
    if (length > kMaxLength) {
        throw SizingError("workload length " + std::to_string(length) + " exceeds the maximum of " +
                          std::to_string(kMaxLength));
    }

    WorkloadData data;
    data.length = length;
    data.seed = seed;
    try {
        data.a.resize(length);
        data.b.resize(length);
        data.c.resize(length);
        data.d_plain.assign(length, 0.0f);
        data.d_vector.assign(length, 0.0f);
    } catch (const std::bad_alloc&) {
        throw SizingError("cannot allocate workload of length " + std::to_string(length));
    }

    std::mt19937_64 engine(seed);
    fill(data.a, engine);
    fill(data.b, engine);
    fill(data.c, engine);
    return data;
}

}  // namespace simdbench
