#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dgli/geometry.hpp"
#include "dgli/gli.hpp"

namespace dgli {

// Rectangular cloth described by its closed boundary polyline.  Traversal
// starts at corner 0; cornerIndices picks the four corner vertices.
struct ClothConfiguration {
    std::string name;
    Polyline3 boundary;
    std::array<std::size_t, 4> corner_indices{};
    std::optional<std::string> class_label;
    std::optional<int> frame_index;
};

// Throws DataError when the boundary is open, corner indices are out of
// range or not strictly increasing from 0, a side has no segments, or the
// boundary self-intersects (tolerance 1e-9).
void validate_configuration(const ClothConfiguration& config);

// Number of boundary segments on side k (corner k to corner k+1, wrapping).
std::size_t side_segment_count(const ClothConfiguration& config, int side);

std::array<Point3, 4> corner_points(const ClothConfiguration& config);

struct EdgeSelection {
    std::vector<std::size_t> segment_indices;
};

// For each corner the two boundary segments one step away from the
// corner-incident ones, ascending.  Eight segments for any valid
// configuration; throws DataError when a side is too coarse to keep the
// selected segments distinct (fewer than 4 segments).
EdgeSelection default_edge_selection(const ClothConfiguration& config);

struct DgliCoordinates {
    std::size_t m = 0;                // selected segment count
    std::vector<double> values;       // pair (i,j), i<j, row-major
    std::vector<bool> clamped;

    std::size_t pair_count() const { return m * (m - 1) / 2; }
    bool all_clamped() const;
    // Index of pair (i, j) with i < j in the flattened layout.
    std::size_t pair_index(std::size_t i, std::size_t j) const;
};

DgliCoordinates compute_coordinates(const ClothConfiguration& config,
                                    const EdgeSelection& selection,
                                    const PerturbationSpec& spec = {});

DgliCoordinates compute_coordinates(const ClothConfiguration& config,
                                    const PerturbationSpec& spec = {});

}  // namespace dgli
