#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>

#include "simdbench/datagen.hpp"
#include "simdbench/error.hpp"

using namespace simdbench;

TEST_CASE("generate is deterministic") {
    const auto x = generate(8, 42);
    const auto y = generate(8, 42);
    CHECK(x == y);
    CHECK(std::memcmp(x.a.data(), y.a.data(), 8 * sizeof(float)) == 0);

    const auto z = generate(8, 43);
    CHECK(z.a != x.a);
}

TEST_CASE("generated inputs stay in [1, 10] and outputs start at zero") {
    const auto data = generate(1'000'000, 123);
    for (const auto* arr : {&data.a, &data.b, &data.c}) {
        const auto [lo, hi] = std::minmax_element(arr->begin(), arr->end());
        CHECK(*lo >= 1.0f);
        CHECK(*hi <= 10.0f);
        CHECK(std::all_of(arr->begin(), arr->end(), [](float v) { return std::isfinite(v); }));
    }
    CHECK(std::all_of(data.d_plain.begin(), data.d_plain.end(), [](float v) { return v == 0.0f; }));
    CHECK(std::all_of(data.d_vector.begin(), data.d_vector.end(), [](float v) { return v == 0.0f; }));
    CHECK(data.d_plain.data() != data.d_vector.data());
}

TEST_CASE("fill mapping hits both ends of the range") {
    CHECK(fill_value(0) == 1.0f);
    CHECK(fill_value(0xFFFFFFFFu) <= 10.0f);
    CHECK(fill_value(0xFFFFFFFFu) > 9.99f);
    CHECK(fill_value(0x80000000u) == 5.5f);
}

TEST_CASE("sample mean of a small workload is near 5.5") {
    // Brute-force oracle: mean of the generated values.
    const auto data = generate(1000, 7);
    const double mean = std::accumulate(data.a.begin(), data.a.end(), 0.0) / 1000.0;
    CHECK(mean >= 5.0);
    CHECK(mean <= 6.0);
}

TEST_CASE("the a array does not depend on the length") {
    // a is drawn first from the stream; b and c do depend on the length.
    const auto small = generate(4, 9);
    const auto large = generate(8, 9);
    CHECK(std::equal(small.a.begin(), small.a.end(), large.a.begin()));
}

TEST_CASE("invalid lengths are rejected") {
    CHECK_THROWS_AS(generate(0, 1), SizingError);
    CHECK_THROWS_AS(generate(kMaxLength + 1, 1), SizingError);
}
