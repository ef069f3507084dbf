#pragma once

#include <cstddef>

#include "dgli/geometry.hpp"

namespace dgli {

// Signed volume of the tetrahedron spanned by the four points, times 6:
// det(b-a, c-a, d-a).
double tetra_volume(Point3 a, Point3 b, Point3 c, Point3 d);

// Writing number contribution of an ordered segment pair, closed form.
// Symmetric in its arguments; exactly zero for coplanar pairs.
// Throws NumericError when the segments intersect or nearly touch.
double segment_gli(const Segment& s1, const Segment& s2);

// Same quantity by tensor Gauss-Legendre quadrature of the double integral.
// Independent of the closed form; used as a reference.
double gli_quadrature(const Segment& s1, const Segment& s2, int order);

// Sum of segment_gli over all pairs with one segment from each curve.
// For a single closed curve passed twice this is not the writhe; the two
// arguments are treated as distinct curves.
double curve_gli(const Polyline3& c1, const Polyline3& c2);

struct PerturbationSpec {
    Vec3 direction{0.0, 0.0, 1.0};
    double epsilon = 1e-8;
    double clamp_magnitude = 1e4;
};

// Throws DataError unless direction is unit length, epsilon in (0, 1e-3],
// clamp_magnitude > 0.
void validate(const PerturbationSpec& spec);

struct DgliValue {
    double value = 0.0;
    bool clamped = false;
};

// Directional derivative of the pair writhe under translation of both
// terminal endpoints along spec.direction, forward difference.  Values
// beyond clamp_magnitude (or non-finite ones) are clamped and flagged.
DgliValue dgli_segments(const Segment& s1, const Segment& s2,
                        const PerturbationSpec& spec = {});

// Central-difference variant kept for verification.
DgliValue dgli_segments_central(const Segment& s1, const Segment& s2,
                                const PerturbationSpec& spec = {});

}  // namespace dgli
