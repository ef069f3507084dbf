#include "dgli/geometry.hpp"

#include <algorithm>

#include "dgli/error.hpp"

namespace dgli {

double segment_distance(const Segment& sa, const Segment& sb) {
    const Vec3 d1 = sa.end - sa.start;
    const Vec3 d2 = sb.end - sb.start;
    const Vec3 r = sa.start - sb.start;
    const double a = dot(d1, d1);
    const double e = dot(d2, d2);
    const double f = dot(d2, r);

    double s = 0.0, t = 0.0;
    if (a <= 0.0 && e <= 0.0) {
        return norm(r);
    }
    if (a <= 0.0) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        const double c = dot(d1, r);
        if (e <= 0.0) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            const double b = dot(d1, d2);
            const double denom = a * e - b * b;
            if (denom > 0.0) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
            t = (b * s + f) / e;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    const Point3 p1 = sa.start + d1 * s;
    const Point3 p2 = sb.start + d2 * t;
    return norm(p1 - p2);
}

Vec3 rotate_z(Vec3 p, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y, p.z};
}

Vec3 rotate_about_axis(Vec3 p, Vec3 origin, Vec3 axis, double angle) {
    const Vec3 v = p - origin;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Vec3 rotated = v * c + cross(axis, v) * s + axis * (dot(axis, v) * (1.0 - c));
    return origin + rotated;
}

double Polyline3::length() const {
    double total = 0.0;
    for (std::size_t i = 0; i < segment_count(); ++i) total += segment(i).length();
    return total;
}

void validate_polyline(const Polyline3& p, double duplicate_tol) {
    if (p.closed && p.vertices.size() < 3) {
        throw DataError("closed polyline needs at least 3 vertices");
    }
    if (!p.closed && p.vertices.size() < 2) {
        throw DataError("polyline needs at least 2 vertices");
    }
    for (const Point3& v : p.vertices) {
        if (!is_finite(v)) throw DataError("polyline vertex is not finite");
    }
    for (std::size_t i = 0; i < p.segment_count(); ++i) {
        if (p.segment(i).length() <= duplicate_tol) {
            throw DataError("polyline has duplicate consecutive vertices");
        }
    }
}

bool polyline_simple(const Polyline3& p, double tol) {
    const std::size_t n = p.segment_count();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent =
                j == i + 1 || (p.closed && i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segment_distance(p.segment(i), p.segment(j)) <= tol) return false;
        }
    }
    return true;
}

}  // namespace dgli
