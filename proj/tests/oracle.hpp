#pragma once

// Test-only element-wise reference, written independently of the library
// kernels: one output element at a time, straight from the scenario
// definitions.

#include <bit>
#include <climits>
#include <cmath>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace simdbench::testing {

inline float oracle_element(int id, const std::vector<float>& A, const std::vector<float>& B,
                            const std::vector<float>& C, std::size_t i) {
    const std::size_t n = A.size();
    const bool edge = i == 0 || i == n - 1;
    switch (id) {
        case 1: return A[i] * B[i] + C[i];
        case 2: return edge ? 0.0f : A[i - 1] * B[i] + C[i] + B[i + 1];
        case 3: return A[i] * std::sqrt(B[i]) + std::abs(C[i]) - std::cos(A[i]) / C[i] + std::pow(B[i], 2.5f);
        case 4:
            return edge ? 0.0f
                        : A[i - 1] * std::sqrt(B[i]) + std::abs(C[i]) - std::cos(A[i]) / C[i] +
                              std::pow(B[i + 1], 2.5f);
        case 5: return i % 2 == 0 ? A[i] + B[i] : A[i] - B[i];
        case 6: return A[i] > 5 ? A[i] + B[i] : A[i] - B[i];
        case 7:
            if (!(A[i] > 5)) return A[i] - B[i];
            if (B[i] >= 8) return A[i] * B[i];
            if (B[i] <= 5) return A[i] / B[i];
            return A[i] + B[i];
        case 8:
            if (!(A[i] > 5)) return std::ceil(A[i]);
            if (B[i] >= 8) return std::sqrt(A[i]);
            if (B[i] <= 5) return std::pow(A[i], B[i]);
            return std::cos(A[i]);
    }
    return 0.0f;
}

inline std::vector<float> oracle(int id, const std::vector<float>& A, const std::vector<float>& B,
                                 const std::vector<float>& C) {
    std::vector<float> out(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) out[i] = oracle_element(id, A, B, C, i);
    return out;
}

/// Distance in units in the last place between two finite floats.
inline std::int64_t ulp_distance(float x, float y) {
    const auto ordered = [](float f) {
        const auto bits = static_cast<std::int64_t>(std::bit_cast<std::int32_t>(f));
        return bits < 0 ? std::int64_t{INT32_MIN} - bits : bits;
    };
    const auto d = ordered(x) - ordered(y);
    return d < 0 ? -d : d;
}

}  // namespace simdbench::testing
