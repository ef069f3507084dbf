#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgli/error.hpp"
#include "dgli/geometry.hpp"
#include "helpers.hpp"

using namespace dgli;

namespace {

// Dense-sampling reference: minimum over a parameter grid.
double sampled_distance(const Segment& a, const Segment& b, int grid) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= grid; ++i) {
        const Point3 p = a.at(static_cast<double>(i) / grid);
        for (int j = 0; j <= grid; ++j) {
            best = std::min(best, norm(p - b.at(static_cast<double>(j) / grid)));
        }
    }
    return best;
}

}  // namespace

TEST_CASE("segment distance matches dense sampling") {
    Rng rng(101);
    for (int iter = 0; iter < 200; ++iter) {
        const Segment a{testing::random_point(rng), testing::random_point(rng)};
        const Segment b{testing::random_point(rng), testing::random_point(rng)};
        const double exact = segment_distance(a, b);
        const double sampled = sampled_distance(a, b, 400);
        CHECK(exact <= sampled + 1e-12);
        // Grid spacing bounds how far the sampled minimum can overshoot.
        const double slack = (a.length() + b.length()) / 400.0;
        CHECK(sampled <= exact + slack);
    }
}

TEST_CASE("segment distance of known pairs") {
    const Segment a{{0, 0, 0}, {1, 0, 0}};
    CHECK(segment_distance(a, {{0, 1, 0}, {1, 1, 0}}) == doctest::Approx(1.0));
    CHECK(segment_distance(a, {{2, 0, 0}, {3, 0, 0}}) == doctest::Approx(1.0));
    CHECK(segment_distance(a, {{0.5, -1, 0}, {0.5, 1, 0}}) == doctest::Approx(0.0));
    CHECK(segment_distance(a, {{0.25, 0.5, 0.5}, {0.75, 0.5, 0.5}}) ==
          doctest::Approx(std::sqrt(0.5)));
    // Degenerate segments fall back to point distances.
    CHECK(segment_distance({{1, 1, 1}, {1, 1, 1}}, {{1, 1, 2}, {1, 1, 2}}) ==
          doctest::Approx(1.0));
}

TEST_CASE("rotations preserve length and compose") {
    Rng rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        const Vec3 p = testing::random_point(rng);
        const Vec3 q = rotate_z(p, 0.3);
        CHECK(norm(q) == doctest::Approx(norm(p)).epsilon(1e-12));
        const Vec3 axis = normalized(testing::random_point(rng) + Vec3{0, 0, 2});
        const Vec3 origin = testing::random_point(rng);
        const double angle = rng.uniform(-3.0, 3.0);
        const Vec3 once = rotate_about_axis(p, origin, axis, angle);
        const Vec3 back = rotate_about_axis(once, origin, axis, -angle);
        CHECK(norm(back - p) < 1e-12);
        CHECK(norm(once - origin) == doctest::Approx(norm(p - origin)).epsilon(1e-12));
    }
}

TEST_CASE("rotate_about_axis lifts the left side of the axis") {
    // Right-hand rule about +x: +y goes to +z.
    const Vec3 r = rotate_about_axis({0, 1, 0}, {0, 0, 0}, {1, 0, 0}, testing::kTestPi / 2);
    CHECK(norm(r - Vec3{0, 0, 1}) < 1e-12);
}

TEST_CASE("polyline validation") {
    Polyline3 open;
    open.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}};
    CHECK_NOTHROW(validate_polyline(open));
    CHECK(open.segment_count() == 2);

    Polyline3 closed = open;
    closed.closed = true;
    CHECK(closed.segment_count() == 3);
    CHECK_NOTHROW(validate_polyline(closed));

    Polyline3 dup = open;
    dup.vertices.push_back({1, 1, 0});
    CHECK_THROWS_AS(validate_polyline(dup), DataError);

    Polyline3 tiny;
    tiny.vertices = {{0, 0, 0}, {1, 0, 0}};
    tiny.closed = true;
    CHECK_THROWS_AS(validate_polyline(tiny), DataError);

    Polyline3 nan = open;
    nan.vertices[1].y = std::nan("");
    CHECK_THROWS_AS(validate_polyline(nan), DataError);
}

TEST_CASE("simplicity detects self-intersection") {
    Polyline3 bow;
    bow.closed = true;
    bow.vertices = {{0, 0, 0}, {1, 1, 0}, {1, 0, 0}, {0, 1, 0}};
    CHECK_FALSE(polyline_simple(bow, 1e-9));

    Polyline3 square;
    square.closed = true;
    square.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
    CHECK(polyline_simple(square, 1e-9));

    // Two layers separated by a small gap stay simple at a tighter tolerance.
    Polyline3 layered = square;
    layered.vertices.push_back({0, 0.5, 1e-6});
    layered.vertices.push_back({1, 0.5, 1e-6});
    CHECK_FALSE(polyline_simple(layered, 1e-3));
    CHECK(polyline_simple(layered, 1e-9));
}

TEST_CASE("polyline length accumulates segments") {
    Polyline3 square;
    square.closed = true;
    square.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
    CHECK(square.length() == doctest::Approx(4.0));
    square.closed = false;
    CHECK(square.length() == doctest::Approx(3.0));
}
