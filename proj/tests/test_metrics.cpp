#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "dgli/error.hpp"
#include "dgli/metrics.hpp"

using namespace dgli;

TEST_CASE("ranks of distinct values") {
    const std::vector<double> ranks = rank_vector({3.0, 1.0, 2.0});
    CHECK(ranks == std::vector<double>{3.0, 1.0, 2.0});
}

TEST_CASE("tied values share fractional ranks") {
    const std::vector<double> ranks = rank_vector({1.0, 2.0, 2.0, 3.0});
    CHECK(ranks == std::vector<double>{1.0, 2.5, 2.5, 4.0});

    const std::vector<double> all_tied = rank_vector({5.0, 5.0, 5.0});
    CHECK(all_tied == std::vector<double>{2.0, 2.0, 2.0});
}

TEST_CASE("rank sum is n(n+1)/2 even with ties") {
    const std::vector<double> values = {0.3, 0.3, -1.0, 0.3, 7.0, -1.0, 2.0};
    double sum = 0.0;
    for (double r : rank_vector(values)) sum += r;
    CHECK(sum == 7.0 * 8.0 / 2.0);
}

TEST_CASE("rank input must be finite") {
    CHECK_THROWS_AS(rank_vector({1.0, std::nan("")}), DataError);
}

TEST_CASE("identical ranking gives distance exactly zero") {
    const std::vector<double> a = {0.1, 0.5, 0.2, 0.9};
    const std::vector<double> b = {1.0, 30.0, 2.0, 100.0};  // same order
    CHECK(spearman_distance(a, b) == 0.0);
    CHECK(spearman_distance(a, a) == 0.0);
}

TEST_CASE("reversed ranking gives distance exactly two") {
    const std::vector<double> a = {1.0, 2.0, 3.0, 4.0, 5.0};
    const std::vector<double> b = {9.0, 7.0, 5.0, 3.0, 1.0};
    CHECK(spearman_distance(a, b) == 2.0);
}

TEST_CASE("known intermediate rank correlation") {
    // Ranks 1,2,3 vs 2,1,3: rho = 1 - 6*2/(3*8) = 0.5.
    CHECK(spearman_distance({1.0, 2.0, 3.0}, {2.0, 1.0, 3.0}) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // Single swap on four entries: rho = 1 - 6*2/(4*15) = 0.8.
    CHECK(spearman_distance({1.0, 2.0, 3.0, 4.0}, {2.0, 1.0, 3.0, 4.0}) ==
          doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("spearman ignores monotone rescaling") {
    const std::vector<double> a = {0.4, -0.2, 1.7, 0.05};
    std::vector<double> b;
    for (double v : a) b.push_back(std::exp(3.0 * v) - 2.0);
    CHECK(spearman_distance(a, b) == 0.0);
}

TEST_CASE("spearman error cases") {
    CHECK_THROWS_AS(spearman_distance({1.0, 2.0}, {1.0}), DataError);
    CHECK_THROWS_AS(spearman_distance({1.0}, {2.0}), DataError);
    CHECK_THROWS_AS(spearman_distance({2.0, 2.0, 2.0}, {1.0, 2.0, 3.0}), DataError);
    CHECK_THROWS_AS(spearman_distance({1.0, 2.0, 3.0}, {5.0, 5.0, 5.0}), DataError);
}

TEST_CASE("spearman stays within its bounds") {
    std::uint64_t state = 42;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    };
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<double> a(20), b(20);
        for (int i = 0; i < 20; ++i) {
            a[i] = next();
            b[i] = next();
        }
        const double d = spearman_distance(a, b);
        CHECK(d >= 0.0);
        CHECK(d <= 2.0);
    }
}

TEST_CASE("euclidean distance") {
    CHECK(euclidean_distance({0.0, 0.0}, {3.0, 4.0}) == doctest::Approx(5.0));
    CHECK(euclidean_distance({1.0}, {1.0}) == 0.0);
    CHECK_THROWS_AS(euclidean_distance({}, {}), DataError);
    CHECK_THROWS_AS(euclidean_distance({1.0}, {1.0, 2.0}), DataError);
}
