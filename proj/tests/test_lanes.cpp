#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "simdbench/lanes.hpp"
#include "oracle.hpp"

using namespace simdbench::lanes;

namespace {

Float8 filled(float v) {
    Float8 x;
    x.fill(v);
    return x;
}

}  // namespace

TEST_CASE("lane width is 8 floats in 256 bits") {
    CHECK(kWidth == 8);
    CHECK(kWidth * sizeof(float) * 8 == 256);
}

TEST_CASE("select_lanes") {
    const Float8 t{1, 2, 3, 4, 5, 6, 7, 8};
    const Float8 f{-1, -2, -3, -4, -5, -6, -7, -8};

    SUBCASE("all true") { CHECK(select_lanes(Mask8{true, true, true, true, true, true, true, true}, t, f) == t); }
    SUBCASE("all false") { CHECK(select_lanes(Mask8{}, t, f) == f); }
    SUBCASE("alternating") {
        const Mask8 m{true, false, true, false, true, false, true, false};
        CHECK(select_lanes(m, filled(1), filled(0)) == Float8{1, 0, 1, 0, 1, 0, 1, 0});
    }
    SUBCASE("select(m, x, x) == x for every mask") {
        std::mt19937 rng(5);
        std::uniform_real_distribution<float> dist(-100, 100);
        for (unsigned bits = 0; bits < 256; ++bits) {
            Mask8 m;
            Float8 x;
            for (std::size_t i = 0; i < kWidth; ++i) {
                m[i] = (bits >> i) & 1u;
                x[i] = dist(rng);
            }
            CHECK(select_lanes(m, x, x) == x);
        }
    }
}

TEST_CASE("compare_gt is strict and ordered") {
    const float nan = std::numeric_limits<float>::quiet_NaN();
    const Float8 a{6, 5, nan, 5.0000005f, -1, 10, 4.999f, 100};
    const auto m = compare_gt(a, 5.0f);
    CHECK(m == Mask8{true, false, false, true, false, true, false, true});
}

TEST_CASE("lane-wise math matches the scalar library") {
    CHECK(lanewise(LaneOp::sqrt, filled(4.0f)) == filled(2.0f));
    CHECK(lanewise(LaneOp::ceil, filled(3.0f)) == filled(3.0f));
    CHECK(lanewise(LaneOp::ceil, filled(3.2f)) == filled(4.0f));
    CHECK(lanewise(LaneOp::abs, filled(-2.5f)) == filled(2.5f));

    const auto p = lanewise(LaneOp::pow, filled(2.0f), filled(2.5f));
    for (float v : p) CHECK(v == doctest::Approx(5.656854249).epsilon(1e-6));

    // Within 2 ulp of the scalar call on the datagen range.
    std::mt19937 rng(11);
    std::uniform_real_distribution<float> dist(1.0f, 10.0f);
    for (int round = 0; round < 200; ++round) {
        Float8 x;
        Float8 y;
        for (std::size_t i = 0; i < kWidth; ++i) {
            x[i] = dist(rng);
            y[i] = dist(rng);
        }
        const auto s = lanewise(LaneOp::sqrt, x);
        const auto c = lanewise(LaneOp::cos, x);
        const auto w = lanewise(LaneOp::pow, x, y);
        const auto e = lanewise(LaneOp::ceil, x);
        for (std::size_t i = 0; i < kWidth; ++i) {
            CHECK(simdbench::testing::ulp_distance(s[i], std::sqrt(x[i])) <= 2);
            CHECK(simdbench::testing::ulp_distance(c[i], std::cos(x[i])) <= 2);
            CHECK(simdbench::testing::ulp_distance(w[i], std::pow(x[i], y[i])) <= 2);
            CHECK(e[i] == std::ceil(x[i]));
        }
    }
}

TEST_CASE("active backend reports which operations are native") {
    CHECK_FALSE(is_native(LaneOp::cos));
    CHECK_FALSE(is_native(LaneOp::pow));
    if (kActiveBackend != "emulated") {
        CHECK(is_native(LaneOp::sqrt));
        CHECK(is_native(LaneOp::ceil));
    }
}

TEST_CASE("emulated and active backends agree on mask algebra") {
    using A = Active;
    using E = Emulated;
    std::mt19937 rng(3);
    std::uniform_real_distribution<float> dist(0.0f, 11.0f);
    for (int round = 0; round < 500; ++round) {
        Float8 x;
        Float8 y;
        for (std::size_t i = 0; i < kWidth; ++i) {
            x[i] = dist(rng);
            y[i] = std::floor(dist(rng));
        }
        const auto ax = A::load(x.data());
        const auto ay = A::load(y.data());
        const auto ex = E::load(x.data());
        const auto ey = E::load(y.data());
        CHECK(A::mask_bits(A::cmp_gt(ax, ay)) == E::mask_bits(E::cmp_gt(ex, ey)));
        CHECK(A::mask_bits(A::cmp_ge(ax, ay)) == E::mask_bits(E::cmp_ge(ex, ey)));
        CHECK(A::mask_bits(A::cmp_le(ax, ay)) == E::mask_bits(E::cmp_le(ex, ey)));
        const auto am = A::mask_and_not(A::cmp_gt(ax, ay), A::cmp_le(ay, A::broadcast(5.0f)));
        const auto em = E::mask_and_not(E::cmp_gt(ex, ey), E::cmp_le(ey, E::broadcast(5.0f)));
        CHECK(A::mask_bits(am) == E::mask_bits(em));
    }
    for (std::uint32_t bits = 0; bits < 256; ++bits) {
        CHECK(A::mask_bits(A::mask_from_bits(bits)) == bits);
        CHECK(E::mask_bits(E::mask_from_bits(bits)) == bits);
    }
}
