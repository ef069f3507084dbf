#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dgli/cloth.hpp"
#include "dgli/datagen.hpp"
#include "dgli/error.hpp"
#include "helpers.hpp"

using namespace dgli;

TEST_CASE("validation catches malformed configurations") {
    ClothConfiguration config = make_flat(1.0, 1.0, 5);
    CHECK_NOTHROW(validate_configuration(config));

    ClothConfiguration open = config;
    open.boundary.closed = false;
    CHECK_THROWS_AS(validate_configuration(open), DataError);

    ClothConfiguration shifted = config;
    shifted.corner_indices = {1, 5, 10, 15};
    CHECK_THROWS_AS(validate_configuration(shifted), DataError);

    ClothConfiguration unsorted = config;
    unsorted.corner_indices = {0, 10, 5, 15};
    CHECK_THROWS_AS(validate_configuration(unsorted), DataError);

    ClothConfiguration out_of_range = config;
    out_of_range.corner_indices = {0, 5, 10, 20};
    CHECK_THROWS_AS(validate_configuration(out_of_range), DataError);

    ClothConfiguration crossed = config;
    // Drag one vertex across the opposite edge.
    crossed.boundary.vertices[2] = {0.4, 1.5, 0.0};
    CHECK_THROWS_AS(validate_configuration(crossed), DataError);
}

TEST_CASE("side segment counts") {
    const ClothConfiguration config = make_flat(2.0, 1.0, 5);
    for (int side = 0; side < 4; ++side) {
        CHECK(side_segment_count(config, side) == 5);
    }
    CHECK_THROWS_AS(side_segment_count(config, 4), DataError);
}

TEST_CASE("corner points follow the indices") {
    const ClothConfiguration config = make_flat(2.0, 1.0, 4);
    const auto corners = corner_points(config);
    CHECK(norm(corners[0] - Point3{0, 0, 0}) == 0.0);
    CHECK(norm(corners[1] - Point3{2, 0, 0}) == 0.0);
    CHECK(norm(corners[2] - Point3{2, 1, 0}) == 0.0);
    CHECK(norm(corners[3] - Point3{0, 1, 0}) == 0.0);
}

TEST_CASE("default selection picks the segments next to the corner-incident ones") {
    const ClothConfiguration config = make_flat(1.0, 1.0, 5);
    const EdgeSelection selection = default_edge_selection(config);
    CHECK(selection.segment_indices ==
          std::vector<std::size_t>{1, 3, 6, 8, 11, 13, 16, 18});
}

TEST_CASE("selection on uneven side counts") {
    // 6 segments on the first two sides, 4 on the rest: corners at 0,6,12,16.
    ClothConfiguration config;
    config.name = "uneven";
    config.boundary.closed = true;
    auto add_side = [&](Point3 from, Point3 to, int k) {
        for (int i = 0; i < k; ++i) {
            config.boundary.vertices.push_back(
                from + (to - from) * (static_cast<double>(i) / k));
        }
    };
    add_side({0, 0, 0}, {1, 0, 0}, 6);
    add_side({1, 0, 0}, {1, 1, 0}, 6);
    add_side({1, 1, 0}, {0, 1, 0}, 4);
    add_side({0, 1, 0}, {0, 0, 0}, 4);
    config.corner_indices = {0, 6, 12, 16};
    const EdgeSelection selection = default_edge_selection(config);
    CHECK(selection.segment_indices ==
          std::vector<std::size_t>{1, 4, 7, 10, 13, 14, 17, 18});
}

TEST_CASE("too coarse sides are rejected") {
    const ClothConfiguration config = make_flat(1.0, 1.0, 3);
    CHECK_THROWS_AS(default_edge_selection(config), DataError);
    const ClothConfiguration coarse = make_flat(1.0, 1.0, 2);
    CHECK_THROWS_AS(default_edge_selection(coarse), DataError);
    CHECK_NOTHROW(default_edge_selection(make_flat(1.0, 1.0, 4)));
}

TEST_CASE("coordinate layout") {
    const ClothConfiguration config = make_flat(1.0, 1.0, 5);
    const DgliCoordinates coords = compute_coordinates(config);
    CHECK(coords.m == 8);
    CHECK(coords.values.size() == 28);
    CHECK(coords.clamped.size() == 28);
    CHECK(coords.pair_count() == 28);
    CHECK(coords.pair_index(0, 1) == 0);
    CHECK(coords.pair_index(0, 7) == 6);
    CHECK(coords.pair_index(1, 2) == 7);
    CHECK(coords.pair_index(6, 7) == 27);
    CHECK_THROWS_AS(coords.pair_index(3, 3), DataError);
    CHECK_THROWS_AS(coords.pair_index(0, 8), DataError);
}

TEST_CASE("flat cloth coordinates are finite and not all clamped") {
    const DgliCoordinates coords = compute_coordinates(make_flat(1.0, 1.0, 5));
    CHECK_FALSE(coords.all_clamped());
    for (std::size_t i = 0; i < coords.values.size(); ++i) {
        CHECK(std::isfinite(coords.values[i]));
    }
}

TEST_CASE("coordinates match pairwise derivative calls") {
    const ClothConfiguration config = make_flat(1.0, 1.0, 5);
    const EdgeSelection selection = default_edge_selection(config);
    const DgliCoordinates coords = compute_coordinates(config, selection);
    for (std::size_t i = 0; i < coords.m; ++i) {
        for (std::size_t j = i + 1; j < coords.m; ++j) {
            const DgliValue v = dgli_segments(
                config.boundary.segment(selection.segment_indices[i]),
                config.boundary.segment(selection.segment_indices[j]));
            // Same batched kernel path: identical to the last bit.
            CHECK(coords.values[coords.pair_index(i, j)] == v.value);
            CHECK(coords.clamped[coords.pair_index(i, j)] == v.clamped);
        }
    }
}

TEST_CASE("coordinates are invariant under in-plane rigid motions") {
    const ClothConfiguration base = make_flat(1.0, 1.0, 5);
    const DgliCoordinates reference = compute_coordinates(base);
    Rng rng(64);
    for (int iter = 0; iter < 10; ++iter) {
        const double angle = rng.uniform(0.0, 6.28);
        const Vec3 shift{rng.uniform(-4, 4), rng.uniform(-4, 4), 0.0};
        ClothConfiguration moved = base;
        for (Point3& v : moved.boundary.vertices) v = rotate_z(v, angle) + shift;
        const DgliCoordinates coords = compute_coordinates(moved);
        for (std::size_t k = 0; k < coords.values.size(); ++k) {
            CHECK(coords.values[k] ==
                  doctest::Approx(reference.values[k]).epsilon(1e-9));
        }
    }
}

TEST_CASE("coordinates scale inversely with the cloth") {
    const ClothConfiguration base = make_flat(1.0, 1.0, 5);
    const DgliCoordinates reference = compute_coordinates(base);
    const double factor = 2.5;
    ClothConfiguration scaled = base;
    for (Point3& v : scaled.boundary.vertices) v = v * factor;
    const DgliCoordinates coords = compute_coordinates(scaled);
    for (std::size_t k = 0; k < coords.values.size(); ++k) {
        CHECK(coords.values[k] * factor ==
              doctest::Approx(reference.values[k]).epsilon(1e-6));
    }
}

TEST_CASE("custom selections and validation") {
    const ClothConfiguration config = make_flat(1.0, 1.0, 5);
    EdgeSelection narrow;
    narrow.segment_indices = {1, 6, 11, 16};
    const DgliCoordinates coords = compute_coordinates(config, narrow);
    CHECK(coords.m == 4);
    CHECK(coords.values.size() == 6);

    EdgeSelection unsorted;
    unsorted.segment_indices = {6, 1};
    CHECK_THROWS_AS(compute_coordinates(config, unsorted), DataError);

    EdgeSelection out_of_range;
    out_of_range.segment_indices = {1, 99};
    CHECK_THROWS_AS(compute_coordinates(config, out_of_range), DataError);

    EdgeSelection too_small;
    too_small.segment_indices = {3};
    CHECK_THROWS_AS(compute_coordinates(config, too_small), DataError);
}
