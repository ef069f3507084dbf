#include "dgli/baselines.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "dgli/error.hpp"

namespace dgli {

std::vector<double> edge_min_distances(const ClothConfiguration& config,
                                       const EdgeSelection& selection) {
    validate_configuration(config);
    const std::size_t m = selection.segment_indices.size();
    if (m < 2) throw DataError("edge selection needs at least two segments");
    std::vector<Segment> segments;
    segments.reserve(m);
    for (std::size_t idx : selection.segment_indices) {
        if (idx >= config.boundary.segment_count()) {
            throw DataError("selected segment index out of range");
        }
        segments.push_back(config.boundary.segment(idx));
    }
    std::vector<double> out;
    out.reserve(m * (m - 1) / 2);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            out.push_back(segment_distance(segments[i], segments[j]));
        }
    }
    return out;
}

std::vector<double> edge_min_distances(const ClothConfiguration& config) {
    return edge_min_distances(config, default_edge_selection(config));
}

std::vector<double> corner_distances(const ClothConfiguration& config) {
    validate_configuration(config);
    const auto corners = corner_points(config);
    std::vector<double> out;
    out.reserve(6);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            out.push_back(norm(corners[i] - corners[j]));
        }
    }
    return out;
}

Polyline3 resample_by_arclength(const Polyline3& p, std::size_t n) {
    validate_polyline(p);
    if (n < (p.closed ? 3u : 2u)) throw DataError("too few resample points");
    const double total = p.length();
    if (!(total > 0.0)) throw DataError("degenerate polyline length");

    const std::size_t segs = p.segment_count();
    std::vector<double> cumulative(segs + 1, 0.0);
    for (std::size_t i = 0; i < segs; ++i) {
        cumulative[i + 1] = cumulative[i] + p.segment(i).length();
    }

    Polyline3 out;
    out.closed = p.closed;
    out.vertices.reserve(n);
    const double spacing = p.closed ? total / static_cast<double>(n)
                                    : total / static_cast<double>(n - 1);
    std::size_t seg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double target = spacing * static_cast<double>(k);
        target = std::min(target, total);
        while (seg + 1 < segs && cumulative[seg + 1] < target) ++seg;
        const double len = cumulative[seg + 1] - cumulative[seg];
        const double t = len > 0.0 ? (target - cumulative[seg]) / len : 0.0;
        out.vertices.push_back(p.segment(seg).at(std::min(t, 1.0)));
    }
    return out;
}

std::vector<Point3> align_rigid(const std::vector<Point3>& moving,
                                const std::vector<Point3>& target) {
    if (moving.size() != target.size()) {
        throw DataError("rigid alignment needs equal point counts");
    }
    if (moving.size() < 3) throw DataError("rigid alignment needs at least 3 points");

    const std::size_t n = moving.size();
    Eigen::Matrix3Xd p(3, n), q(3, n);
    for (std::size_t i = 0; i < n; ++i) {
        p.col(i) << moving[i].x, moving[i].y, moving[i].z;
        q.col(i) << target[i].x, target[i].y, target[i].z;
    }
    const Eigen::Vector3d pc = p.rowwise().mean();
    const Eigen::Vector3d qc = q.rowwise().mean();
    p.colwise() -= pc;
    q.colwise() -= qc;

    const Eigen::Matrix3d h = p * q.transpose();
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d r = svd.matrixV() * svd.matrixU().transpose();
    if (r.determinant() < 0.0) {
        Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
        flip(2, 2) = -1.0;
        r = svd.matrixV() * flip * svd.matrixU().transpose();
    }

    std::vector<Point3> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Eigen::Vector3d v = r * p.col(i) + qc;
        out[i] = {v.x(), v.y(), v.z()};
    }
    return out;
}

double frechet_distance(const std::vector<Point3>& a, const std::vector<Point3>& b) {
    if (a.empty() || b.empty()) throw DataError("empty curve");
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    std::vector<double> prev(m), row(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double d = norm(a[0] - b[j]);
        prev[j] = j == 0 ? d : std::max(prev[j - 1], d);
    }
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double d = norm(a[i] - b[j]);
            double reach;
            if (j == 0) {
                reach = prev[0];
            } else {
                reach = std::min({prev[j], prev[j - 1], row[j - 1]});
            }
            row[j] = std::max(reach, d);
        }
        std::swap(prev, row);
    }
    return prev[m - 1];
}

double hausdorff_distance(const std::vector<Point3>& a, const std::vector<Point3>& b) {
    if (a.empty() || b.empty()) throw DataError("empty point set");
    auto directed = [](const std::vector<Point3>& from, const std::vector<Point3>& to) {
        double worst = 0.0;
        for (const Point3& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const Point3& q : to) best = std::min(best, norm(p - q));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

}  // namespace dgli
