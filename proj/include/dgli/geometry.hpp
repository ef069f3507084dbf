#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace dgli {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

using Point3 = Vec3;

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(Vec3 a, double s) { return {a.x * s, a.y * s, a.z * s}; }
inline Vec3 operator*(double s, Vec3 a) { return a * s; }
inline Vec3 operator/(Vec3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }
inline Vec3& operator+=(Vec3& a, Vec3 b) { a = a + b; return a; }
inline Vec3& operator-=(Vec3& a, Vec3 b) { a = a - b; return a; }
inline bool operator==(Vec3 a, Vec3 b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(Vec3 a) { return dot(a, a); }
inline double norm(Vec3 a) { return std::sqrt(norm2(a)); }
inline Vec3 normalized(Vec3 a) { return a / norm(a); }
inline bool is_finite(Vec3 a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// Strict ordering used to pick a canonical operand order for symmetric kernels.
inline bool lex_less(Vec3 a, Vec3 b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

struct Segment {
    Point3 start;
    Point3 end;

    Vec3 direction() const { return end - start; }
    double length() const { return norm(end - start); }
    Point3 at(double t) const { return start + (end - start) * t; }
};

// Minimum distance between closed segments (Ericson's clamped formulation).
double segment_distance(const Segment& a, const Segment& b);

Vec3 rotate_z(Vec3 p, double angle);

// Rodrigues rotation of p about the line through `origin` with unit direction `axis`.
Vec3 rotate_about_axis(Vec3 p, Vec3 origin, Vec3 axis, double angle);

struct Polyline3 {
    std::vector<Point3> vertices;
    bool closed = false;

    std::size_t segment_count() const {
        if (vertices.size() < 2) return 0;
        return closed ? vertices.size() : vertices.size() - 1;
    }
    Segment segment(std::size_t i) const {
        std::size_t j = (i + 1) % vertices.size();
        return {vertices[i], vertices[j]};
    }
    double length() const;
};

// Throws DataError on non-finite vertices, duplicate consecutive vertices,
// or a closed polyline with fewer than 3 vertices.
void validate_polyline(const Polyline3& p, double duplicate_tol = 1e-12);

// True when no pair of non-adjacent segments comes closer than tol.
bool polyline_simple(const Polyline3& p, double tol);

}  // namespace dgli
