#pragma once

// Eight 32-bit float lanes, i.e. one 256-bit register.
//
// Each backend is a stateless struct of static functions over its own
// `Float` and `Mask` register types. The kernels are written once against
// this interface and instantiated for the backend selected at compile time
// (`lanes::Active`). The emulated backend is always available so tests can
// run the same kernels without intrinsics.
//
// Backends must not reassociate or fuse: every lane operation rounds exactly
// like the corresponding scalar float expression.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string_view>

#if defined(__AVX__)
#include <immintrin.h>
#elif defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#endif

namespace simdbench::lanes {

/// Lanes per register: 256 / (8 * sizeof(float)).
inline constexpr std::size_t kWidth = 256 / (8 * sizeof(float));
static_assert(kWidth == 8);

using Float8 = std::array<float, kWidth>;
using Mask8 = std::array<bool, kWidth>;

/// Portable fallback: a plain array per register.
struct Emulated {
    struct Float {
        Float8 v;
    };
    struct Mask {
        Mask8 v;
    };

    static constexpr std::string_view name = "emulated";
    static constexpr bool native_sqrt = false;
    static constexpr bool native_abs = false;
    static constexpr bool native_ceil = false;
    static constexpr bool native_cos = false;
    static constexpr bool native_pow = false;

    static Float load(const float* p) {
        Float r;
        for (std::size_t i = 0; i < kWidth; ++i) r.v[i] = p[i];
        return r;
    }
    static void store(float* p, Float x) {
        for (std::size_t i = 0; i < kWidth; ++i) p[i] = x.v[i];
    }
    static Float broadcast(float s) {
        Float r;
        r.v.fill(s);
        return r;
    }

    template <class Op>
    static Float map(Float x, Op op) {
        for (auto& e : x.v) e = op(e);
        return x;
    }
    template <class Op>
    static Float zip(Float x, Float y, Op op) {
        for (std::size_t i = 0; i < kWidth; ++i) x.v[i] = op(x.v[i], y.v[i]);
        return x;
    }
    template <class Op>
    static Mask compare(Float x, Float y, Op op) {
        Mask m;
        for (std::size_t i = 0; i < kWidth; ++i) m.v[i] = op(x.v[i], y.v[i]);
        return m;
    }

    static Float add(Float x, Float y) { return zip(x, y, [](float a, float b) { return a + b; }); }
    static Float sub(Float x, Float y) { return zip(x, y, [](float a, float b) { return a - b; }); }
    static Float mul(Float x, Float y) { return zip(x, y, [](float a, float b) { return a * b; }); }
    static Float div(Float x, Float y) { return zip(x, y, [](float a, float b) { return a / b; }); }

    static Mask cmp_gt(Float x, Float y) { return compare(x, y, [](float a, float b) { return a > b; }); }
    static Mask cmp_ge(Float x, Float y) { return compare(x, y, [](float a, float b) { return a >= b; }); }
    static Mask cmp_le(Float x, Float y) { return compare(x, y, [](float a, float b) { return a <= b; }); }

    static Mask mask_and(Mask x, Mask y) {
        for (std::size_t i = 0; i < kWidth; ++i) x.v[i] = x.v[i] && y.v[i];
        return x;
    }
    /// x & ~y
    static Mask mask_and_not(Mask x, Mask y) {
        for (std::size_t i = 0; i < kWidth; ++i) x.v[i] = x.v[i] && !y.v[i];
        return x;
    }
    static Mask mask_from_bits(std::uint32_t bits) {
        Mask m;
        for (std::size_t i = 0; i < kWidth; ++i) m.v[i] = ((bits >> i) & 1u) != 0;
        return m;
    }
    static std::uint32_t mask_bits(Mask m) {
        std::uint32_t bits = 0;
        for (std::size_t i = 0; i < kWidth; ++i) bits |= static_cast<std::uint32_t>(m.v[i]) << i;
        return bits;
    }

    static Float select(Mask m, Float if_true, Float if_false) {
        for (std::size_t i = 0; i < kWidth; ++i) if_false.v[i] = m.v[i] ? if_true.v[i] : if_false.v[i];
        return if_false;
    }

    static Float sqrt(Float x) { return map(x, [](float a) { return std::sqrt(a); }); }
    static Float abs(Float x) { return map(x, [](float a) { return std::fabs(a); }); }
    static Float ceil(Float x) { return map(x, [](float a) { return std::ceil(a); }); }
    static Float cos(Float x) { return map(x, [](float a) { return std::cos(a); }); }
    static Float pow(Float x, Float y) { return zip(x, y, [](float a, float b) { return std::pow(a, b); }); }
};

#if defined(__AVX__)

struct Avx {
    using Float = __m256;
    using Mask = __m256;

    static constexpr std::string_view name = "avx";
    static constexpr bool native_sqrt = true;
    static constexpr bool native_abs = true;
    static constexpr bool native_ceil = true;
    // No vector cos/pow instruction exists; these lower to a per-lane loop.
    static constexpr bool native_cos = false;
    static constexpr bool native_pow = false;

    static Float load(const float* p) { return _mm256_loadu_ps(p); }
    static void store(float* p, Float x) { _mm256_storeu_ps(p, x); }
    static Float broadcast(float s) { return _mm256_set1_ps(s); }

    static Float add(Float x, Float y) { return _mm256_add_ps(x, y); }
    static Float sub(Float x, Float y) { return _mm256_sub_ps(x, y); }
    static Float mul(Float x, Float y) { return _mm256_mul_ps(x, y); }
    static Float div(Float x, Float y) { return _mm256_div_ps(x, y); }

    static Mask cmp_gt(Float x, Float y) { return _mm256_cmp_ps(x, y, _CMP_GT_OS); }
    static Mask cmp_ge(Float x, Float y) { return _mm256_cmp_ps(x, y, _CMP_GE_OS); }
    static Mask cmp_le(Float x, Float y) { return _mm256_cmp_ps(x, y, _CMP_LE_OS); }

    static Mask mask_and(Mask x, Mask y) { return _mm256_and_ps(x, y); }
    static Mask mask_and_not(Mask x, Mask y) { return _mm256_andnot_ps(y, x); }
    static Mask mask_from_bits(std::uint32_t bits) {
        alignas(32) std::uint32_t words[kWidth];
        for (std::size_t i = 0; i < kWidth; ++i) words[i] = ((bits >> i) & 1u) ? 0xFFFFFFFFu : 0u;
        return _mm256_castsi256_ps(_mm256_load_si256(reinterpret_cast<const __m256i*>(words)));
    }
    static std::uint32_t mask_bits(Mask m) { return static_cast<std::uint32_t>(_mm256_movemask_ps(m)); }

    static Float select(Mask m, Float if_true, Float if_false) { return _mm256_blendv_ps(if_false, if_true, m); }

    static Float sqrt(Float x) { return _mm256_sqrt_ps(x); }
    static Float abs(Float x) { return _mm256_andnot_ps(_mm256_set1_ps(-0.0f), x); }
    static Float ceil(Float x) { return _mm256_ceil_ps(x); }
    static Float cos(Float x) {
        alignas(32) float buf[kWidth];
        _mm256_store_ps(buf, x);
        for (auto& e : buf) e = std::cos(e);
        return _mm256_load_ps(buf);
    }
    static Float pow(Float x, Float y) {
        alignas(32) float base[kWidth];
        alignas(32) float exponent[kWidth];
        _mm256_store_ps(base, x);
        _mm256_store_ps(exponent, y);
        for (std::size_t i = 0; i < kWidth; ++i) base[i] = std::pow(base[i], exponent[i]);
        return _mm256_load_ps(base);
    }
};

using Active = Avx;

#elif defined(__aarch64__) && defined(__ARM_NEON)

/// Two 128-bit NEON registers per 256-bit value.
struct Neon {
    struct Float {
        float32x4_t lo, hi;
    };
    struct Mask {
        uint32x4_t lo, hi;
    };

    static constexpr std::string_view name = "neon";
    static constexpr bool native_sqrt = true;
    static constexpr bool native_abs = true;
    static constexpr bool native_ceil = true;
    static constexpr bool native_cos = false;
    static constexpr bool native_pow = false;

    static Float load(const float* p) { return {vld1q_f32(p), vld1q_f32(p + 4)}; }
    static void store(float* p, Float x) {
        vst1q_f32(p, x.lo);
        vst1q_f32(p + 4, x.hi);
    }
    static Float broadcast(float s) { return {vdupq_n_f32(s), vdupq_n_f32(s)}; }

    static Float add(Float x, Float y) { return {vaddq_f32(x.lo, y.lo), vaddq_f32(x.hi, y.hi)}; }
    static Float sub(Float x, Float y) { return {vsubq_f32(x.lo, y.lo), vsubq_f32(x.hi, y.hi)}; }
    static Float mul(Float x, Float y) { return {vmulq_f32(x.lo, y.lo), vmulq_f32(x.hi, y.hi)}; }
    static Float div(Float x, Float y) { return {vdivq_f32(x.lo, y.lo), vdivq_f32(x.hi, y.hi)}; }

    static Mask cmp_gt(Float x, Float y) { return {vcgtq_f32(x.lo, y.lo), vcgtq_f32(x.hi, y.hi)}; }
    static Mask cmp_ge(Float x, Float y) { return {vcgeq_f32(x.lo, y.lo), vcgeq_f32(x.hi, y.hi)}; }
    static Mask cmp_le(Float x, Float y) { return {vcleq_f32(x.lo, y.lo), vcleq_f32(x.hi, y.hi)}; }

    static Mask mask_and(Mask x, Mask y) { return {vandq_u32(x.lo, y.lo), vandq_u32(x.hi, y.hi)}; }
    static Mask mask_and_not(Mask x, Mask y) { return {vbicq_u32(x.lo, y.lo), vbicq_u32(x.hi, y.hi)}; }
    static Mask mask_from_bits(std::uint32_t bits) {
        std::uint32_t words[kWidth];
        for (std::size_t i = 0; i < kWidth; ++i) words[i] = ((bits >> i) & 1u) ? 0xFFFFFFFFu : 0u;
        return {vld1q_u32(words), vld1q_u32(words + 4)};
    }
    static std::uint32_t mask_bits(Mask m) {
        std::uint32_t words[kWidth];
        vst1q_u32(words, m.lo);
        vst1q_u32(words + 4, m.hi);
        std::uint32_t bits = 0;
        for (std::size_t i = 0; i < kWidth; ++i) bits |= (words[i] >> 31) << i;
        return bits;
    }

    static Float select(Mask m, Float if_true, Float if_false) {
        return {vbslq_f32(m.lo, if_true.lo, if_false.lo), vbslq_f32(m.hi, if_true.hi, if_false.hi)};
    }

    static Float sqrt(Float x) { return {vsqrtq_f32(x.lo), vsqrtq_f32(x.hi)}; }
    static Float abs(Float x) { return {vabsq_f32(x.lo), vabsq_f32(x.hi)}; }
    static Float ceil(Float x) { return {vrndpq_f32(x.lo), vrndpq_f32(x.hi)}; }
    static Float cos(Float x) {
        float buf[kWidth];
        store(buf, x);
        for (auto& e : buf) e = std::cos(e);
        return load(buf);
    }
    static Float pow(Float x, Float y) {
        float base[kWidth];
        float exponent[kWidth];
        store(base, x);
        store(exponent, y);
        for (std::size_t i = 0; i < kWidth; ++i) base[i] = std::pow(base[i], exponent[i]);
        return load(base);
    }
};

using Active = Neon;

#else

using Active = Emulated;

#endif

/// Name of the backend compiled into this build ("avx", "neon" or "emulated").
inline constexpr std::string_view kActiveBackend = Active::name;

enum class LaneOp { sqrt, abs, cos, pow, ceil };

/// Per-lane `mask[i] ? if_true[i] : if_false[i]` on the active backend.
Float8 select_lanes(const Mask8& mask, const Float8& if_true, const Float8& if_false);

/// Ordered `a[i] > threshold`; NaN lanes compare false.
Mask8 compare_gt(const Float8& a, float threshold);

/// Applies a math function lane-wise on the active backend. `second` is the
/// exponent for LaneOp::pow and ignored otherwise.
Float8 lanewise(LaneOp op, const Float8& x, const Float8& second = {});

/// True when the active backend has a native instruction for `op`, false
/// when it falls back to a per-lane scalar call.
bool is_native(LaneOp op) noexcept;

}  // namespace simdbench::lanes
