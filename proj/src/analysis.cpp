#include "dgli/analysis.hpp"

#include <algorithm>
#include <limits>

#include "dgli/error.hpp"

namespace dgli {

std::vector<Sample> build_samples(const std::vector<ClothConfiguration>& configs,
                                  ReprKind kind, MetricKind metric,
                                  const FeatureParams& params) {
    std::vector<Sample> samples;
    samples.reserve(configs.size());
    for (const ClothConfiguration& config : configs) {
        Sample s;
        s.id = config.name;
        s.class_label = config.class_label.value_or("");
        s.feature = build_feature(config, kind, metric, params);
        samples.push_back(std::move(s));
    }
    return samples;
}

ConfusionMatrix confusion_matrix(const std::vector<Sample>& samples) {
    const std::size_t n = samples.size();
    if (n == 0) throw DataError("no samples");
    ConfusionMatrix m;
    m.ids.reserve(n);
    m.labels.reserve(n);
    for (const Sample& s : samples) {
        m.ids.push_back(s.id);
        m.labels.push_back(s.class_label);
    }
    m.entries.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = feature_distance(samples[i].feature, samples[j].feature);
            m.entries[i * n + j] = d;
            m.entries[j * n + i] = d;
        }
    }
    return m;
}

namespace {

struct ClassGroup {
    std::string label;
    std::vector<std::size_t> members;   // indices into samples
};

std::vector<ClassGroup> group_by_class(const std::vector<Sample>& samples) {
    std::vector<ClassGroup> groups;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].class_label.empty()) {
            throw DataError("sample without class label: " + samples[i].id);
        }
        auto it = std::find_if(groups.begin(), groups.end(), [&](const ClassGroup& g) {
            return g.label == samples[i].class_label;
        });
        if (it == groups.end()) {
            groups.push_back({samples[i].class_label, {i}});
        } else {
            it->members.push_back(i);
        }
    }
    std::sort(groups.begin(), groups.end(),
              [](const ClassGroup& a, const ClassGroup& b) { return a.label < b.label; });
    return groups;
}

FeatureVector centroid_feature(const std::vector<Sample>& samples,
                               const std::vector<std::size_t>& members) {
    const FeatureVector& first = samples[members.front()].feature;
    FeatureVector centroid;
    centroid.kind = first.kind;
    centroid.metric = first.metric;
    centroid.values.assign(first.values.size(), 0.0);
    for (std::size_t idx : members) {
        const std::vector<double>& v = samples[idx].feature.values;
        if (v.size() != centroid.values.size()) {
            throw DataError("inconsistent feature lengths in class");
        }
        for (std::size_t k = 0; k < v.size(); ++k) centroid.values[k] += v[k];
    }
    for (double& v : centroid.values) v /= static_cast<double>(members.size());
    return centroid;
}

}  // namespace

double db_index(const std::vector<Sample>& samples) {
    const std::vector<ClassGroup> groups = group_by_class(samples);
    if (groups.size() < 2) throw DataError("Davies-Bouldin needs at least two classes");

    std::vector<FeatureVector> centroids;
    std::vector<double> dispersion;
    centroids.reserve(groups.size());
    dispersion.reserve(groups.size());
    for (const ClassGroup& g : groups) {
        FeatureVector c = centroid_feature(samples, g.members);
        double sigma = 0.0;
        for (std::size_t idx : g.members) {
            sigma += feature_distance(samples[idx].feature, c);
        }
        sigma /= static_cast<double>(g.members.size());
        centroids.push_back(std::move(c));
        dispersion.push_back(sigma);
    }

    double total = 0.0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        double worst = 0.0;
        for (std::size_t j = 0; j < groups.size(); ++j) {
            if (j == i) continue;
            const double sep = feature_distance(centroids[i], centroids[j]);
            if (sep < 1e-12) {
                throw NumericError("coincident class centroids: " + groups[i].label +
                                   " and " + groups[j].label);
            }
            worst = std::max(worst, (dispersion[i] + dispersion[j]) / sep);
        }
        total += worst;
    }
    return total / static_cast<double>(groups.size());
}

namespace {

std::vector<std::size_t> medoids_for_class(const std::vector<Sample>& samples,
                                           const ClassGroup& group,
                                           std::size_t count) {
    const std::vector<std::size_t>& members = group.members;
    const std::size_t n = members.size();
    count = std::min(count, n);

    const FeatureVector centroid = centroid_feature(samples, members);
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = feature_distance(samples[members[i]].feature,
                                              samples[members[j]].feature);
            dist[i][j] = d;
            dist[j][i] = d;
        }
    }

    // Seed with the member closest to the class centroid.
    std::size_t seed = 0;
    double seed_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double d = feature_distance(samples[members[i]].feature, centroid);
        if (d < seed_d ||
            (d == seed_d && samples[members[i]].id < samples[members[seed]].id)) {
            seed = i;
            seed_d = d;
        }
    }

    std::vector<std::size_t> chosen{seed};
    std::vector<bool> in_set(n, false);
    in_set[seed] = true;

    // Farthest-point growth.
    while (chosen.size() < count) {
        std::size_t best = n;
        double best_score = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (in_set[i]) continue;
            double nearest = std::numeric_limits<double>::infinity();
            for (std::size_t c : chosen) nearest = std::min(nearest, dist[i][c]);
            const bool wins =
                nearest > best_score ||
                (nearest == best_score && best < n &&
                 samples[members[i]].id < samples[members[best]].id);
            if (best == n || wins) {
                best = i;
                best_score = nearest;
            }
        }
        chosen.push_back(best);
        in_set[best] = true;
    }

    auto assignment_cost = [&](const std::vector<std::size_t>& set) {
        double cost = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double nearest = std::numeric_limits<double>::infinity();
            for (std::size_t c : set) nearest = std::min(nearest, dist[i][c]);
            cost += nearest;
        }
        return cost;
    };

    // One replacement sweep.
    double cost = assignment_cost(chosen);
    for (std::size_t slot = 0; slot < chosen.size(); ++slot) {
        std::size_t best_candidate = chosen[slot];
        double best_cost = cost;
        for (std::size_t i = 0; i < n; ++i) {
            if (in_set[i]) continue;
            std::vector<std::size_t> trial = chosen;
            trial[slot] = i;
            const double c = assignment_cost(trial);
            if (c < best_cost - 1e-15) {
                best_cost = c;
                best_candidate = i;
            }
        }
        if (best_candidate != chosen[slot]) {
            in_set[chosen[slot]] = false;
            in_set[best_candidate] = true;
            chosen[slot] = best_candidate;
            cost = best_cost;
        }
    }

    std::sort(chosen.begin(), chosen.end(), [&](std::size_t a, std::size_t b) {
        return samples[members[a]].id < samples[members[b]].id;
    });
    std::vector<std::size_t> out;
    out.reserve(chosen.size());
    for (std::size_t i : chosen) out.push_back(members[i]);
    return out;
}

}  // namespace

std::vector<Representative> choose_representatives(
    const std::vector<Sample>& samples,
    const std::map<std::string, std::size_t>& counts, std::size_t default_count) {
    const std::vector<ClassGroup> groups = group_by_class(samples);
    std::vector<Representative> reps;
    for (const ClassGroup& g : groups) {
        auto it = counts.find(g.label);
        const std::size_t count = it != counts.end() ? it->second : default_count;
        if (count == 0) throw DataError("representative count must be positive");
        for (std::size_t idx : medoids_for_class(samples, g, count)) {
            reps.push_back({g.label, samples[idx].id, samples[idx].feature});
        }
    }
    return reps;
}

Classification classify_nearest(const FeatureVector& feature,
                                const std::vector<Representative>& representatives) {
    if (representatives.empty()) throw DataError("no representatives");
    Classification best;
    double best_d = std::numeric_limits<double>::infinity();
    bool found = false;
    for (const Representative& rep : representatives) {
        const double d = feature_distance(feature, rep.feature);
        const bool wins =
            !found || d < best_d ||
            (d == best_d && rep.class_label < best.class_label) ||
            (d == best_d && rep.class_label == best.class_label &&
             rep.id < best.representative_id);
        if (wins) {
            best = {rep.class_label, rep.id, d};
            best_d = d;
            found = true;
        }
    }
    return best;
}

LooResult leave_one_out(const std::vector<Sample>& samples,
                        const std::map<std::string, std::size_t>& counts,
                        std::size_t default_count) {
    if (samples.size() < 2) throw DataError("leave-one-out needs at least two samples");
    LooResult result;
    result.predicted.resize(samples.size());
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        std::vector<Sample> rest;
        rest.reserve(samples.size() - 1);
        for (std::size_t j = 0; j < samples.size(); ++j) {
            if (j != i) rest.push_back(samples[j]);
        }
        const auto reps = choose_representatives(rest, counts, default_count);
        const Classification c = classify_nearest(samples[i].feature, reps);
        result.predicted[i] = c.class_label;
        if (c.class_label == samples[i].class_label) ++hits;
    }
    result.accuracy = static_cast<double>(hits) / static_cast<double>(samples.size());
    return result;
}

}  // namespace dgli
