#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dgli/error.hpp"
#include "dgli/gli.hpp"
#include "helpers.hpp"

using namespace dgli;

namespace {

// Coplanar pair used throughout: the base writhe is exactly zero, so the
// derivative probes the formulation's stability.
const Segment kPlanarA{{0.1, -0.2, 0.0}, {0.9, 0.15, 0.0}};
const Segment kPlanarB{{0.3, 0.55, 0.0}, {1.2, 0.8, 0.0}};

// Frozen via an independent route: derivative of the volume factor times
// the quadrature of the regular part, cross-checked by central differences
// over a step sweep.
constexpr double kPlanarDerivative = -0.020212119984;

}  // namespace

TEST_CASE("coplanar derivative is stable across step sizes") {
    for (double eps : {1e-6, 1e-7, 1e-8, 1e-9}) {
        PerturbationSpec spec;
        spec.epsilon = eps;
        const DgliValue forward = dgli_segments(kPlanarA, kPlanarB, spec);
        CHECK_FALSE(forward.clamped);
        CHECK(forward.value ==
              doctest::Approx(kPlanarDerivative).epsilon(1e-4));
    }
}

TEST_CASE("forward and central differences agree to four significant digits") {
    Rng rng(500);
    PerturbationSpec spec;
    for (int iter = 0; iter < 50; ++iter) {
        const auto [a, b] = testing::separated_pair(rng, 0.1);
        const DgliValue forward = dgli_segments(a, b, spec);
        PerturbationSpec central_spec;
        central_spec.epsilon = 1e-6;
        const DgliValue central = dgli_segments_central(a, b, central_spec);
        REQUIRE_FALSE(forward.clamped);
        REQUIRE_FALSE(central.clamped);
        const double scale = std::max(std::fabs(central.value), 1e-6);
        CHECK(std::fabs(forward.value - central.value) / scale < 1e-4);
    }
}

TEST_CASE("derivative direction flips with the perturbation direction") {
    PerturbationSpec down;
    down.direction = {0.0, 0.0, -1.0};
    const DgliValue up_value = dgli_segments(kPlanarA, kPlanarB);
    const DgliValue down_value = dgli_segments(kPlanarA, kPlanarB, down);
    CHECK(down_value.value == doctest::Approx(-up_value.value).epsilon(1e-6));
}

TEST_CASE("argument order does not change the derivative at all") {
    Rng rng(12);
    for (int iter = 0; iter < 100; ++iter) {
        const auto [a, b] = testing::separated_pair(rng, 0.05);
        const DgliValue ab = dgli_segments(a, b);
        const DgliValue ba = dgli_segments(b, a);
        CHECK(ab.value == ba.value);
        CHECK(ab.clamped == ba.clamped);
    }
}

TEST_CASE("crossing pairs clamp with a flag") {
    // Nearly touching crossing, met at different parameters, so the
    // perturbation pushes one segment through the other and the difference
    // quotient blows past any reasonable clamp.
    const Segment a{{0, 0, 0}, {1, 0, 0}};
    const Segment b{{0.9, -0.1, 1e-10}, {0.9, 0.9, 1e-10}};
    PerturbationSpec spec;
    spec.clamp_magnitude = 1e4;
    const DgliValue v = dgli_segments(a, b, spec);
    CHECK(v.clamped);
    CHECK(std::fabs(v.value) == doctest::Approx(1e4));
}

TEST_CASE("clamp magnitude is configurable") {
    const Segment a{{0, 0, 0}, {1, 0, 0}};
    const Segment b{{0.9, -0.1, 1e-10}, {0.9, 0.9, 1e-10}};
    PerturbationSpec spec;
    spec.clamp_magnitude = 10.0;
    const DgliValue v = dgli_segments(a, b, spec);
    CHECK(v.clamped);
    CHECK(std::fabs(v.value) == doctest::Approx(10.0));
}

TEST_CASE("perturbation spec validation") {
    PerturbationSpec spec;
    CHECK_NOTHROW(validate(spec));

    PerturbationSpec bad_dir = spec;
    bad_dir.direction = {0, 0, 2};
    CHECK_THROWS_AS(validate(bad_dir), DataError);

    PerturbationSpec bad_eps = spec;
    bad_eps.epsilon = 0.0;
    CHECK_THROWS_AS(validate(bad_eps), DataError);
    bad_eps.epsilon = 1e-2;
    CHECK_THROWS_AS(validate(bad_eps), DataError);

    PerturbationSpec bad_clamp = spec;
    bad_clamp.clamp_magnitude = 0.0;
    CHECK_THROWS_AS(validate(bad_clamp), DataError);

    CHECK_THROWS_AS(dgli_segments(kPlanarA, kPlanarB, bad_dir), DataError);
}

TEST_CASE("general directions are supported") {
    PerturbationSpec diag;
    diag.direction = normalized(Vec3{1.0, 1.0, 1.0});
    const DgliValue v = dgli_segments(kPlanarA, kPlanarB, diag);
    CHECK_FALSE(v.clamped);
    CHECK(std::isfinite(v.value));
    // The z component of the direction carries the out-of-plane response.
    const DgliValue vertical = dgli_segments(kPlanarA, kPlanarB);
    CHECK(v.value == doctest::Approx(vertical.value / std::sqrt(3.0)).epsilon(1e-3));
}
