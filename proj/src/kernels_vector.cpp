#include <cmath>

#include "simdbench/lanes.hpp"
#include "simdbench/scenarios.hpp"

namespace simdbench {

namespace {

using lanes::kWidth;

/// First index of the scalar tail for a body covering [begin, end).
constexpr std::size_t tail_start(std::size_t begin, std::size_t end) noexcept {
    const std::size_t body = end - begin;
    return begin + (body - body % kWidth);
}

template <class L>
struct Kernels {
    using F = typename L::Float;

    static void scenario1(const float* A, const float* B, const float* C, float* D, std::size_t n) {
        for (std::size_t i = 0; i + kWidth <= n; i += kWidth) {
            const F a = L::load(&A[i]);
            const F b = L::load(&B[i]);
            const F c = L::load(&C[i]);
            F d = L::mul(a, b);
            d = L::add(d, c);
            L::store(&D[i], d);
        }
        for (std::size_t i = tail_start(0, n); i < n; ++i) {
            D[i] = A[i] * B[i] + C[i];
        }
    }

    static void scenario2(const float* A, const float* B, const float* C, float* D, std::size_t n) {
        const std::size_t end = n - 1;
        for (std::size_t i = 1; i + kWidth <= end; i += kWidth) {
            const F a_prev = L::load(&A[i - 1]);
            const F b = L::load(&B[i]);
            const F c = L::load(&C[i]);
            const F b_next = L::load(&B[i + 1]);
            F d = L::mul(a_prev, b);
            d = L::add(d, c);
            d = L::add(d, b_next);
            L::store(&D[i], d);
        }
        for (std::size_t i = tail_start(1, end); i < end; ++i) {
            D[i] = A[i - 1] * B[i] + C[i] + B[i + 1];
        }
        D[0] = 0.0f;
        D[n - 1] = 0.0f;
    }

    // a_mul * sqrt(b) + |c| - cos(a) / c + pow(b_pow, 2.5), left to right.
    static F advanced(F a_mul, F a, F b, F c, F b_pow, F exponent) {
        F d = L::mul(a_mul, L::sqrt(b));
        d = L::add(d, L::abs(c));
        d = L::sub(d, L::div(L::cos(a), c));
        return L::add(d, L::pow(b_pow, exponent));
    }

    static void scenario3(const float* A, const float* B, const float* C, float* D, std::size_t n) {
        const F exponent = L::broadcast(2.5f);
        for (std::size_t i = 0; i + kWidth <= n; i += kWidth) {
            const F a = L::load(&A[i]);
            const F b = L::load(&B[i]);
            const F c = L::load(&C[i]);
            L::store(&D[i], advanced(a, a, b, c, b, exponent));
        }
        for (std::size_t i = tail_start(0, n); i < n; ++i) {
            D[i] = A[i] * std::sqrt(B[i]) + std::abs(C[i]) - std::cos(A[i]) / C[i] + std::pow(B[i], 2.5f);
        }
    }

    static void scenario4(const float* A, const float* B, const float* C, float* D, std::size_t n) {
        const F exponent = L::broadcast(2.5f);
        const std::size_t end = n - 1;
        for (std::size_t i = 1; i + kWidth <= end; i += kWidth) {
            const F a_prev = L::load(&A[i - 1]);
            const F a = L::load(&A[i]);
            const F b = L::load(&B[i]);
            const F c = L::load(&C[i]);
            const F b_next = L::load(&B[i + 1]);
            L::store(&D[i], advanced(a_prev, a, b, c, b_next, exponent));
        }
        for (std::size_t i = tail_start(1, end); i < end; ++i) {
            D[i] = A[i - 1] * std::sqrt(B[i]) + std::abs(C[i]) - std::cos(A[i]) / C[i] + std::pow(B[i + 1], 2.5f);
        }
        D[0] = 0.0f;
        D[n - 1] = 0.0f;
    }

    static void scenario5(const float* A, const float* B, float* D, std::size_t n) {
        // Every register starts on an even index, so lanes 0, 2, 4, 6 take the sum.
        const auto even = L::mask_from_bits(0b01010101u);
        for (std::size_t i = 0; i + kWidth <= n; i += kWidth) {
            const F a = L::load(&A[i]);
            const F b = L::load(&B[i]);
            L::store(&D[i], L::select(even, L::add(a, b), L::sub(a, b)));
        }
        for (std::size_t i = tail_start(0, n); i < n; ++i) {
            if (i % 2 == 0)
                D[i] = A[i] + B[i];
            else
                D[i] = A[i] - B[i];
        }
    }

    static void scenario6(const float* A, const float* B, float* D, std::size_t n) {
        const F five = L::broadcast(5.0f);
        for (std::size_t i = 0; i + kWidth <= n; i += kWidth) {
            const F a = L::load(&A[i]);
            const F b = L::load(&B[i]);
            const auto mask = L::cmp_gt(a, five);
            L::store(&D[i], L::select(mask, L::add(a, b), L::sub(a, b)));
        }
        for (std::size_t i = tail_start(0, n); i < n; ++i) {
            if (A[i] > 5)
                D[i] = A[i] + B[i];
            else
                D[i] = A[i] - B[i];
        }
    }

    static void scenario7(const float* A, const float* B, float* D, std::size_t n) {
        const F five = L::broadcast(5.0f);
        const F eight = L::broadcast(8.0f);
        for (std::size_t i = 0; i + kWidth <= n; i += kWidth) {
            const F a = L::load(&A[i]);
            const F b = L::load(&B[i]);
            const auto outer = L::cmp_gt(a, five);
            const auto high = L::cmp_ge(b, eight);
            const auto low = L::cmp_le(b, five);
            const F inner = L::select(high, L::mul(a, b), L::select(low, L::div(a, b), L::add(a, b)));
            L::store(&D[i], L::select(outer, inner, L::sub(a, b)));
        }
        for (std::size_t i = tail_start(0, n); i < n; ++i) {
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

    static void scenario8(const float* A, const float* B, float* D, std::size_t n) {
        const F five = L::broadcast(5.0f);
        const F eight = L::broadcast(8.0f);
        for (std::size_t i = 0; i + kWidth <= n; i += kWidth) {
            const F a = L::load(&A[i]);
            const F b = L::load(&B[i]);
            const auto outer = L::cmp_gt(a, five);
            const auto high = L::cmp_ge(b, eight);
            const auto low = L::cmp_le(b, five);
            const F inner = L::select(high, L::sqrt(a), L::select(low, L::pow(a, b), L::cos(a)));
            L::store(&D[i], L::select(outer, inner, L::ceil(a)));
        }
        for (std::size_t i = tail_start(0, n); i < n; ++i) {
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

    static void run(int id, const float* A, const float* B, const float* C, float* D, std::size_t n) {
        switch (id) {
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
};

}  // namespace

void run_vector(const ScenarioSpec& spec, const KernelInputs& in, std::span<float> out, Backend backend) {
    check_preconditions(spec, in, out);
    if (backend == Backend::emulated) {
        Kernels<lanes::Emulated>::run(spec.id, in.a.data(), in.b.data(), in.c.data(), out.data(), out.size());
    } else {
        Kernels<lanes::Active>::run(spec.id, in.a.data(), in.b.data(), in.c.data(), out.data(), out.size());
    }
}

}  // namespace simdbench
