#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dgli/representation.hpp"

namespace dgli {

struct Sample {
    std::string id;
    std::string class_label;
    FeatureVector feature;
};

std::vector<Sample> build_samples(const std::vector<ClothConfiguration>& configs,
                                  ReprKind kind, MetricKind metric,
                                  const FeatureParams& params = {});

struct ConfusionMatrix {
    std::vector<std::string> ids;
    std::vector<std::string> labels;
    std::vector<double> entries;   // row-major, symmetric, zero diagonal

    std::size_t size() const { return ids.size(); }
    double at(std::size_t i, std::size_t j) const { return entries[i * size() + j]; }
};

ConfusionMatrix confusion_matrix(const std::vector<Sample>& samples);

// Davies-Bouldin index: dispersion is the mean distance to the class
// centroid (element-wise mean of feature vectors), separation the distance
// between centroids.  Throws DataError without at least two labeled
// classes, NumericError when two centroids coincide.
double db_index(const std::vector<Sample>& samples);

struct Representative {
    std::string class_label;
    std::string id;
    FeatureVector feature;
};

// Per class: one medoid (closest to the centroid) or, for counts > 1,
// greedy farthest-point medoids refined by a single replacement sweep.
// Ties resolve to the lowest sample id.
std::vector<Representative> choose_representatives(
    const std::vector<Sample>& samples,
    const std::map<std::string, std::size_t>& counts = {},
    std::size_t default_count = 1);

struct Classification {
    std::string class_label;
    std::string representative_id;
    double distance = 0.0;
};

// Nearest representative overall; ties resolve to the lexicographically
// smallest class label.
Classification classify_nearest(const FeatureVector& feature,
                                const std::vector<Representative>& representatives);

struct LooResult {
    double accuracy = 0.0;
    std::vector<std::string> predicted;   // aligned with samples
};

LooResult leave_one_out(const std::vector<Sample>& samples,
                        const std::map<std::string, std::size_t>& counts = {},
                        std::size_t default_count = 1);

}  // namespace dgli
