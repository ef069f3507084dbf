#include "dgli/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dgli/error.hpp"

namespace dgli {

std::vector<double> rank_vector(const std::vector<double>& values) {
    const std::size_t n = values.size();
    for (double v : values) {
        if (!std::isfinite(v)) throw DataError("rank input must be finite");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        // Ranks i+1 .. j+1 averaged over the tie group.
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

double spearman_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw DataError("vector length mismatch");
    if (a.size() < 2) throw DataError("need at least two entries for rank correlation");

    const std::vector<double> ra = rank_vector(a);
    const std::vector<double> rb = rank_vector(b);
    const double n = static_cast<double>(a.size());
    const double mean = (n + 1.0) / 2.0;

    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = ra[i] - mean;
        const double db = rb[i] - mean;
        cov += da * db;
        va += da * da;
        vb += db * db;
    }
    if (va == 0.0 || vb == 0.0) {
        throw DataError("constant vector has no rank correlation");
    }
    // Single square root keeps rho exactly +-1 for monotone-equivalent inputs.
    const double rho = cov / std::sqrt(va * vb);
    return 1.0 - rho;
}

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw DataError("vector length mismatch");
    if (a.empty()) throw DataError("empty vector");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

}  // namespace dgli
