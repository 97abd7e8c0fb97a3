#include "simdbench/lanes.hpp"

namespace simdbench::lanes {

namespace {

using L = Active;

L::Mask load_mask(const Mask8& mask) {
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < kWidth; ++i) bits |= static_cast<std::uint32_t>(mask[i]) << i;
    return L::mask_from_bits(bits);
}

Mask8 store_mask(L::Mask mask) {
    const std::uint32_t bits = L::mask_bits(mask);
    Mask8 out{};
    for (std::size_t i = 0; i < kWidth; ++i) out[i] = ((bits >> i) & 1u) != 0;
    return out;
}

Float8 store(L::Float x) {
    Float8 out{};
    L::store(out.data(), x);
    return out;
}

}  // namespace

Float8 select_lanes(const Mask8& mask, const Float8& if_true, const Float8& if_false) {
    return store(L::select(load_mask(mask), L::load(if_true.data()), L::load(if_false.data())));
}

Mask8 compare_gt(const Float8& a, float threshold) {
    return store_mask(L::cmp_gt(L::load(a.data()), L::broadcast(threshold)));
}

Float8 lanewise(LaneOp op, const Float8& x, const Float8& second) {
    const auto v = L::load(x.data());
    switch (op) {
        case LaneOp::sqrt: return store(L::sqrt(v));
        case LaneOp::abs: return store(L::abs(v));
        case LaneOp::cos: return store(L::cos(v));
        case LaneOp::pow: return store(L::pow(v, L::load(second.data())));
        case LaneOp::ceil: return store(L::ceil(v));
    }
    return x;
}

bool is_native(LaneOp op) noexcept {
    switch (op) {
        case LaneOp::sqrt: return L::native_sqrt;
        case LaneOp::abs: return L::native_abs;
        case LaneOp::cos: return L::native_cos;
        case LaneOp::pow: return L::native_pow;
        case LaneOp::ceil: return L::native_ceil;
    }
    return false;
}

}  // namespace simdbench::lanes
