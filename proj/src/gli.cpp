#include "dgli/gli.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "dgli/error.hpp"
#include "dgli/kernels.hpp"
#include "kernels/gli_core.hpp"
#include "pair_frame.hpp"

namespace dgli {

namespace {

constexpr double kPi = kernels::detail::kPi;

// Pair order is irrelevant mathematically; pinning it keeps single-pair and
// batched evaluations bit-identical.
std::pair<Segment, Segment> canonical_order(const Segment& s1, const Segment& s2) {
    const bool swap = lex_less(s2.start, s1.start) ||
                      (s2.start == s1.start && lex_less(s2.end, s1.end));
    return swap ? std::make_pair(s2, s1) : std::make_pair(s1, s2);
}

double singular_tolerance(const Segment& s1, const Segment& s2) {
    const double scale = s1.length() + s2.length();
    return 1e-9 * (scale > 1.0 ? scale : 1.0);
}

double closed_form(const Segment& s1, const Segment& s2) {
    kernels::PairBatch batch;
    batch.push(s1, s2);
    double out = 0.0;
    kernels::gli_batch(batch, &out);
    return out;
}

// Legendre nodes and weights on [0, 1] by Newton iteration.
void gauss_legendre_unit(int order, std::vector<double>& nodes,
                         std::vector<double>& weights) {
    nodes.resize(order);
    weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
            }
            dp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        nodes[i] = 0.5 * (1.0 - x);
        nodes[order - 1 - i] = 0.5 * (1.0 + x);
        const double w = 1.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
}

}  // namespace

double tetra_volume(Point3 a, Point3 b, Point3 c, Point3 d) {
    return dot(b - a, cross(c - a, d - a));
}

double segment_gli(const Segment& s1, const Segment& s2) {
    if (segment_distance(s1, s2) <= singular_tolerance(s1, s2)) {
        throw NumericError("singular segment pair: segments intersect or touch");
    }
    const auto [first, second] = canonical_order(s1, s2);
    return closed_form(first, second);
}

double gli_quadrature(const Segment& s1, const Segment& s2, int order) {
    if (order < 1) throw DataError("quadrature order must be positive");
    if (segment_distance(s1, s2) <= singular_tolerance(s1, s2)) {
        throw NumericError("singular segment pair: segments intersect or touch");
    }
    std::vector<double> nodes, weights;
    gauss_legendre_unit(order, nodes, weights);

    const Vec3 d1 = s1.direction();
    const Vec3 d2 = s2.direction();
    const Vec3 n = cross(d1, d2);
    double sum = 0.0;
    for (int i = 0; i < order; ++i) {
        const Point3 p1 = s1.at(nodes[i]);
        for (int j = 0; j < order; ++j) {
            const Vec3 r = p1 - s2.at(nodes[j]);
            const double rn = norm(r);
            sum += weights[i] * weights[j] * dot(n, r) / (rn * rn * rn);
        }
    }
    return sum / (4.0 * kPi);
}

double curve_gli(const Polyline3& c1, const Polyline3& c2) {
    validate_polyline(c1);
    validate_polyline(c2);
    kernels::PairBatch batch;
    const std::size_t n1 = c1.segment_count();
    const std::size_t n2 = c2.segment_count();
    batch.reserve(n1 * n2);
    for (std::size_t i = 0; i < n1; ++i) {
        const Segment a = c1.segment(i);
        for (std::size_t j = 0; j < n2; ++j) {
            const Segment b = c2.segment(j);
            if (segment_distance(a, b) <= singular_tolerance(a, b)) {
                throw NumericError("curves touch: singular segment pair");
            }
            const auto [first, second] = canonical_order(a, b);
            batch.push(first, second);
        }
    }
    std::vector<double> values(batch.size());
    kernels::gli_batch(batch, values.data());
    double total = 0.0;
    for (double v : values) total += v;
    return total;
}

void validate(const PerturbationSpec& spec) {
    if (!is_finite(spec.direction) || std::fabs(norm(spec.direction) - 1.0) > 1e-12) {
        throw DataError("perturbation direction must be unit length");
    }
    if (!(spec.epsilon > 0.0) || spec.epsilon > 1e-3) {
        throw DataError("perturbation epsilon must be in (0, 1e-3]");
    }
    if (!(spec.clamp_magnitude > 0.0)) {
        throw DataError("clamp magnitude must be positive");
    }
}

namespace detail {

PreparedPair prepare_difference(const Segment& s1, const Segment& s2,
                                const PerturbationSpec& spec) {
    const auto [first, second] = canonical_order(s1, s2);
    const Point3 origin = first.start;
    Point3 pts[4] = {first.start - origin, first.end - origin,
                     second.start - origin, second.end - origin};
    const double scale = norm(pts[1]) + norm(pts[2]) + norm(pts[3]);
    const double flat = 1e-12 * scale;
    Vec3 dir = spec.direction;

    Vec3 ref = pts[1];
    double h = std::hypot(ref.x, ref.y);
    if (h <= flat) {
        ref = pts[3] - pts[2];
        h = std::hypot(ref.x, ref.y);
    }
    if (h <= flat) {
        ref = pts[2];
        h = std::hypot(ref.x, ref.y);
    }
    if (h > flat) {
        const double c = ref.x / h;
        const double s = ref.y / h;
        for (Point3& p : pts) p = {c * p.x + s * p.y, c * p.y - s * p.x, p.z};
        dir = {c * dir.x + s * dir.y, c * dir.y - s * dir.x, dir.z};
    }

    PreparedPair out;
    out.base1 = {pts[0], pts[1]};
    out.base2 = {pts[2], pts[3]};
    const Vec3 step = dir * spec.epsilon;
    out.plus1 = {pts[0], pts[1] + step};
    out.plus2 = {pts[2], pts[3] + step};
    out.minus1 = {pts[0], pts[1] - step};
    out.minus2 = {pts[2], pts[3] - step};

    const Vec3 ab = pts[1] - pts[0];
    const Vec3 ac = pts[2] - pts[0];
    const Vec3 ad = pts[3] - pts[0];
    Vec3 n = cross(ab, ac);
    for (const Vec3& alt : {cross(ab, ad), cross(ac, ad)}) {
        if (norm2(alt) > norm2(n)) n = alt;
    }
    const double nn = norm(n);
    if (nn <= 1e-12 * scale * scale) {
        out.zero = true;  // all four points collinear
    } else if (std::fabs(dot(ab, cross(ac, ad))) <= 1e-13 * scale * scale * scale) {
        out.zero = std::fabs(dot(n, dir)) <= 1e-12 * nn;
    }
    return out;
}

DgliValue difference_quotient(double g_plus, double g_minus, double step,
                              const PerturbationSpec& spec) {
    const double raw = (g_plus - g_minus) / step;
    if (!std::isfinite(raw) || std::fabs(raw) > spec.clamp_magnitude) {
        const double sign = raw < 0.0 ? -1.0 : 1.0;
        return {sign * spec.clamp_magnitude, true};
    }
    return {raw, false};
}

}  // namespace detail

DgliValue dgli_segments(const Segment& s1, const Segment& s2,
                        const PerturbationSpec& spec) {
    validate(spec);
    const detail::PreparedPair pp = detail::prepare_difference(s1, s2, spec);
    if (pp.zero) return {0.0, false};
    kernels::PairBatch batch;
    batch.reserve(2);
    batch.push(pp.base1, pp.base2);
    batch.push(pp.plus1, pp.plus2);
    double g[2] = {0.0, 0.0};
    kernels::gli_batch(batch, g);
    return detail::difference_quotient(g[1], g[0], spec.epsilon, spec);
}

DgliValue dgli_segments_central(const Segment& s1, const Segment& s2,
                                const PerturbationSpec& spec) {
    validate(spec);
    const detail::PreparedPair pp = detail::prepare_difference(s1, s2, spec);
    if (pp.zero) return {0.0, false};
    kernels::PairBatch batch;
    batch.reserve(2);
    batch.push(pp.plus1, pp.plus2);
    batch.push(pp.minus1, pp.minus2);
    double g[2] = {0.0, 0.0};
    kernels::gli_batch(batch, g);
    return detail::difference_quotient(g[0], g[1], 2.0 * spec.epsilon, spec);
}

}  // namespace dgli
