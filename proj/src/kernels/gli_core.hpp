#pragma once

#include <cmath>

// Per-pair closed form shared by the scalar backend and the tail loop of the
// vector backend.  Operation order is fixed; both backends must keep results
// bit-identical, so nothing here may be reordered or contracted.

namespace dgli::kernels::detail {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kInvFourPi = 1.0 / (4.0 * kPi);
inline constexpr double kDegenerateNorm2 = 1e-24;

struct V3 {
    double x, y, z;
};

inline V3 sub(V3 a, V3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline double dot3(V3 a, V3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline V3 cross3(V3 a, V3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// asin(u.v / (|u||v|)) evaluated through the complementary angle:
// 1 - |cos| is produced from |u x v|^2 via the identity
// |u x v|^2 = (|u||v|)^2 - (u.v)^2, which avoids the cancellation that
// otherwise flattens derivatives of near-coplanar configurations.
inline double asin_term(V3 u, V3 v) {
    const double lu2 = dot3(u, u);
    const double lv2 = dot3(v, v);
    if (lu2 < kDegenerateNorm2 || lv2 < kDegenerateNorm2) return 0.0;
    const double np = std::sqrt(lu2) * std::sqrt(lv2);
    const double d = dot3(u, v);
    const V3 c = cross3(u, v);
    const double c2 = dot3(c, c);
    const double q = c2 / (np * (np + std::fabs(d)));
    double h = std::sqrt(0.5 * q);
    h = std::fmin(h, 1.0);
    const double t = kPi / 2 - 2.0 * std::asin(h);
    return d >= 0.0 ? t : -t;
}

inline double gli_pair(double ax, double ay, double az, double bx, double by,
                       double bz, double cx, double cy, double cz, double dx,
                       double dy, double dz) {
    const V3 a{ax, ay, az}, b{bx, by, bz}, c{cx, cy, cz}, d{dx, dy, dz};
    const V3 ab = sub(b, a);
    const V3 ac = sub(c, a);
    const V3 ad = sub(d, a);
    const V3 bc = sub(c, b);
    const V3 bd = sub(d, b);

    const V3 na = cross3(ac, ad);
    const V3 nd = cross3(ad, bd);
    const V3 nb = cross3(bd, bc);
    const V3 nc = cross3(bc, ac);

    const double volume = dot3(ab, na);
    const double sign = (volume > 0.0 ? 1.0 : 0.0) - (volume < 0.0 ? 1.0 : 0.0);

    const double sum = ((asin_term(na, nd) + asin_term(nd, nb)) + asin_term(nb, nc)) +
                       asin_term(nc, na);
    return sign * sum * kInvFourPi;
}

}  // namespace dgli::kernels::detail
