#include "dgli/representation.hpp"

#include <algorithm>

#include "dgli/baselines.hpp"
#include "dgli/error.hpp"
#include "dgli/metrics.hpp"

namespace dgli {

std::string repr_name(ReprKind kind) {
    switch (kind) {
        case ReprKind::dgli: return "dgli";
        case ReprKind::edges: return "edges";
        case ReprKind::corners: return "corners";
        case ReprKind::boundary: return "boundary";
    }
    return "unknown";
}

std::string metric_name(MetricKind metric) {
    switch (metric) {
        case MetricKind::spearman: return "spearman";
        case MetricKind::euclidean: return "euclidean";
        case MetricKind::frechet: return "frechet";
        case MetricKind::hausdorff: return "hausdorff";
    }
    return "unknown";
}

ReprKind parse_repr(const std::string& name) {
    if (name == "dgli") return ReprKind::dgli;
    if (name == "edges") return ReprKind::edges;
    if (name == "corners") return ReprKind::corners;
    if (name == "boundary") return ReprKind::boundary;
    throw DataError("unknown representation: " + name);
}

MetricKind parse_metric(const std::string& name) {
    if (name == "spearman") return MetricKind::spearman;
    if (name == "euclidean") return MetricKind::euclidean;
    if (name == "frechet") return MetricKind::frechet;
    if (name == "hausdorff") return MetricKind::hausdorff;
    throw DataError("unknown metric: " + name);
}

void check_compatible(ReprKind kind, MetricKind metric) {
    const bool vector_kind = kind != ReprKind::boundary;
    const bool vector_metric =
        metric == MetricKind::spearman || metric == MetricKind::euclidean;
    if (vector_kind != vector_metric) {
        throw DataError("metric " + metric_name(metric) +
                        " does not apply to representation " + repr_name(kind));
    }
}

MetricKind default_metric(ReprKind kind) {
    return kind == ReprKind::boundary ? MetricKind::frechet : MetricKind::spearman;
}

FeatureVector build_feature(const ClothConfiguration& config, ReprKind kind,
                            MetricKind metric, const FeatureParams& params) {
    check_compatible(kind, metric);
    FeatureVector feature;
    feature.kind = kind;
    feature.metric = metric;
    switch (kind) {
        case ReprKind::dgli: {
            const DgliCoordinates coords =
                compute_coordinates(config, params.perturbation);
            feature.values = coords.values;
            feature.any_clamped =
                std::any_of(coords.clamped.begin(), coords.clamped.end(),
                            [](bool c) { return c; });
            break;
        }
        case ReprKind::edges:
            feature.values = edge_min_distances(config);
            break;
        case ReprKind::corners:
            feature.values = corner_distances(config);
            break;
        case ReprKind::boundary: {
            const Polyline3 resampled =
                resample_by_arclength(config.boundary, params.resample_points);
            Point3 centroid{};
            for (const Point3& v : resampled.vertices) centroid += v;
            centroid = centroid / static_cast<double>(resampled.vertices.size());
            feature.values.reserve(3 * resampled.vertices.size());
            for (const Point3& v : resampled.vertices) {
                const Point3 c = v - centroid;
                feature.values.push_back(c.x);
                feature.values.push_back(c.y);
                feature.values.push_back(c.z);
            }
            break;
        }
    }
    return feature;
}

namespace {

std::vector<Point3> unflatten(const std::vector<double>& values) {
    if (values.size() % 3 != 0) throw DataError("malformed curve feature");
    std::vector<Point3> points(values.size() / 3);
    for (std::size_t i = 0; i < points.size(); ++i) {
        points[i] = {values[3 * i], values[3 * i + 1], values[3 * i + 2]};
    }
    return points;
}

}  // namespace

double feature_distance(const FeatureVector& a, const FeatureVector& b) {
    if (a.kind != b.kind || a.metric != b.metric) {
        throw DataError("features are not comparable");
    }
    switch (a.metric) {
        case MetricKind::spearman:
            return spearman_distance(a.values, b.values);
        case MetricKind::euclidean:
            return euclidean_distance(a.values, b.values);
        case MetricKind::frechet:
        case MetricKind::hausdorff: {
            const std::vector<Point3> target = unflatten(b.values);
            const std::vector<Point3> moving =
                align_rigid(unflatten(a.values), target);
            return a.metric == MetricKind::frechet
                       ? frechet_distance(moving, target)
                       : hausdorff_distance(moving, target);
        }
    }
    throw DataError("unknown metric");
}

}  // namespace dgli
