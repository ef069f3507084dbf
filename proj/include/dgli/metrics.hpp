#pragma once

#include <vector>

namespace dgli {

// Fractional ranks (1-based); tied values receive the average of the ranks
// they span, so the rank sum is always n(n+1)/2.
std::vector<double> rank_vector(const std::vector<double>& values);

// 1 - Spearman correlation, in [0, 2].  Exactly 0 for identically ranked
// inputs and exactly 2 for reversed ranks.  Throws DataError on length
// mismatch, length < 2, or a constant input vector.
double spearman_distance(const std::vector<double>& a,
                         const std::vector<double>& b);

// Throws DataError on length mismatch or empty input.
double euclidean_distance(const std::vector<double>& a,
                          const std::vector<double>& b);

}  // namespace dgli
