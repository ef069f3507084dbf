#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dgli/cloth.hpp"

namespace dgli {

enum class ReprKind { dgli, edges, corners, boundary };
enum class MetricKind { spearman, euclidean, frechet, hausdorff };

std::string repr_name(ReprKind kind);
std::string metric_name(MetricKind metric);
ReprKind parse_repr(const std::string& name);
MetricKind parse_metric(const std::string& name);

// Vector representations pair with rank or euclidean metrics; the boundary
// curve pairs with curve metrics.  Anything else is a usage error.
void check_compatible(ReprKind kind, MetricKind metric);
MetricKind default_metric(ReprKind kind);

struct FeatureParams {
    std::size_t resample_points = 40;
    PerturbationSpec perturbation{};
};

struct FeatureVector {
    ReprKind kind = ReprKind::dgli;
    MetricKind metric = MetricKind::spearman;
    std::vector<double> values;   // boundary kind: flattened x,y,z triples
    bool any_clamped = false;
};

FeatureVector build_feature(const ClothConfiguration& config, ReprKind kind,
                            MetricKind metric, const FeatureParams& params = {});

double feature_distance(const FeatureVector& a, const FeatureVector& b);

}  // namespace dgli
