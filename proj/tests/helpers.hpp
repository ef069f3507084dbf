#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "dgli/datagen.hpp"
#include "dgli/geometry.hpp"

namespace testing {

inline constexpr double kTestPi = 3.141592653589793238462643383279502884;

inline dgli::Vec3 random_point(dgli::Rng& rng, double lo = -1.0, double hi = 1.0) {
    return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

// Segment pair whose minimum distance is at least `separation` times the
// longer segment length.  Rejection sampling.
inline std::pair<dgli::Segment, dgli::Segment> separated_pair(dgli::Rng& rng,
                                                              double separation) {
    while (true) {
        const dgli::Segment a{random_point(rng), random_point(rng)};
        const dgli::Segment b{random_point(rng), random_point(rng)};
        const double len = std::max(a.length(), b.length());
        if (len < 0.1) continue;
        if (dgli::segment_distance(a, b) >= separation * len) return {a, b};
    }
}

// Planar circle with `segments` edges, offset by `center`, in the plane
// spanned by u and v.
inline dgli::Polyline3 circle(dgli::Point3 center, dgli::Vec3 u, dgli::Vec3 v,
                              double radius, std::size_t segments) {
    dgli::Polyline3 out;
    out.closed = true;
    out.vertices.reserve(segments);
    for (std::size_t i = 0; i < segments; ++i) {
        const double t = 2.0 * kTestPi * static_cast<double>(i) /
                         static_cast<double>(segments);
        out.vertices.push_back(center + u * (radius * std::cos(t)) +
                               v * (radius * std::sin(t)));
    }
    return out;
}

// Exponential-cost reference for the discrete Frechet distance: explores
// every coupling with memoized recursion over (i, j).
inline double frechet_reference(const std::vector<dgli::Point3>& a,
                                const std::vector<dgli::Point3>& b) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<double> memo(n * m, -1.0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> double {
        double& slot = memo[i * m + j];
        if (slot >= 0.0) return slot;
        const double d = dgli::norm(a[i] - b[j]);
        if (i == 0 && j == 0) return slot = d;
        double reach = std::numeric_limits<double>::infinity();
        if (i > 0) reach = std::min(reach, self(self, i - 1, j));
        if (j > 0) reach = std::min(reach, self(self, i, j - 1));
        if (i > 0 && j > 0) reach = std::min(reach, self(self, i - 1, j - 1));
        return slot = std::max(reach, d);
    };
    return rec(rec, n - 1, m - 1);
}

}  // namespace testing
