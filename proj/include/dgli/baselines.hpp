#pragma once

#include <cstddef>
#include <vector>

#include "dgli/cloth.hpp"
#include "dgli/geometry.hpp"

namespace dgli {

// Pairwise minimum distances between the selected boundary segments,
// flattened like the dGLI pair layout (i<j, row-major).
std::vector<double> edge_min_distances(const ClothConfiguration& config,
                                       const EdgeSelection& selection);
std::vector<double> edge_min_distances(const ClothConfiguration& config);

// Six pairwise corner distances: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
std::vector<double> corner_distances(const ClothConfiguration& config);

// Evenly spaced points by arc length.  Closed polylines keep n points with
// spacing L/n starting at vertex 0; open ones keep both endpoints with
// spacing L/(n-1).
Polyline3 resample_by_arclength(const Polyline3& p, std::size_t n);

// Rigid alignment (rotation + translation, no scaling) of `moving` onto
// `target` by index correspondence.  Requires equal sizes, at least 3 points.
std::vector<Point3> align_rigid(const std::vector<Point3>& moving,
                                const std::vector<Point3>& target);

// Discrete Frechet distance between vertex sequences.
double frechet_distance(const std::vector<Point3>& a,
                        const std::vector<Point3>& b);

// Symmetric Hausdorff distance between vertex sets.
double hausdorff_distance(const std::vector<Point3>& a,
                          const std::vector<Point3>& b);

}  // namespace dgli
