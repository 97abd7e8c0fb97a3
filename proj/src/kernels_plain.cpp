// Scalar reference kernels. These are the oracle for the vector variants and
// the "plain" side of every timing comparison, so they stay in their most
// direct form and leave vectorisation to the compiler.

#include <cmath>

#include "simdbench/scenarios.hpp"

namespace simdbench {

namespace {

void scenario1(const float* A, const float* B, const float* C, float* D, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        D[i] = A[i] * B[i] + C[i];
    }
}

void scenario2(const float* A, const float* B, const float* C, float* D, std::size_t n) {
    for (std::size_t i = 1; i < n - 1; ++i) {
        D[i] = A[i - 1] * B[i] + C[i] + B[i + 1];
    }
    D[0] = 0.0f;
    D[n - 1] = 0.0f;
}

void scenario3(const float* A, const float* B, const float* C, float* D, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        D[i] = A[i] * std::sqrt(B[i]) + std::abs(C[i]) - std::cos(A[i]) / C[i] + std::pow(B[i], 2.5f);
    }
}

void scenario4(const float* A, const float* B, const float* C, float* D, std::size_t n) {
    for (std::size_t i = 1; i < n - 1; ++i) {
        D[i] = A[i - 1] * std::sqrt(B[i]) + std::abs(C[i]) - std::cos(A[i]) / C[i] + std::pow(B[i + 1], 2.5f);
    }
    D[0] = 0.0f;
    D[n - 1] = 0.0f;
}

void scenario5(const float* A, const float* B, float* D, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (i % 2 == 0)
            D[i] = A[i] + B[i];
        else
            D[i] = A[i] - B[i];
    }
}

void scenario6(const float* A, const float* B, float* D, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i] > 5)
            D[i] = A[i] + B[i];
        else
            D[i] = A[i] - B[i];
    }
}

void scenario7(const float* A, const float* B, float* D, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i] > 5) {
            if (B[i] >= 8)
                D[i] = A[i] * B[i];
            else if (B[i] <= 5)
                D[i] = A[i] / B[i];
            else
                D[i] = A[i] + B[i];
        } else
            D[i] = A[i] - B[i];
    }
}

void scenario8(const float* A, const float* B, float* D, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i] > 5) {
            if (B[i] >= 8)
                D[i] = std::sqrt(A[i]);
            else if (B[i] <= 5)
                D[i] = std::pow(A[i], B[i]);
            else
                D[i] = std::cos(A[i]);
        } else
            D[i] = std::ceil(A[i]);
    }
}

}  // namespace

void run_plain(const ScenarioSpec& spec, const KernelInputs& in, std::span<float> out) {
    check_preconditions(spec, in, out);
    const float* A = in.a.data();
    const float* B = in.b.data();
    const float* C = in.c.data();
    float* D = out.data();
    const std::size_t n = out.size();
    switch (spec.id) {
        case 1: scenario1(A, B, C, D, n); break;
        case 2: scenario2(A, B, C, D, n); break;
        case 3: scenario3(A, B, C, D, n); break;
        case 4: scenario4(A, B, C, D, n); break;
        case 5: scenario5(A, B, D, n); break;
        case 6: scenario6(A, B, D, n); break;
        case 7: scenario7(A, B, D, n); break;
        case 8: scenario8(A, B, D, n); break;
    }
}

}  // namespace simdbench
