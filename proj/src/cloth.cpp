#include "dgli/cloth.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dgli/error.hpp"
#include "dgli/kernels.hpp"
#include "pair_frame.hpp"

namespace dgli {

void validate_configuration(const ClothConfiguration& config) {
    if (!config.boundary.closed) throw DataError("cloth boundary must be closed");
    validate_polyline(config.boundary);
    const std::size_t n = config.boundary.vertices.size();
    if (config.corner_indices[0] != 0) {
        throw DataError("boundary traversal must start at corner 0");
    }
    for (int k = 0; k < 4; ++k) {
        if (config.corner_indices[k] >= n) throw DataError("corner index out of range");
        if (k > 0 && config.corner_indices[k] <= config.corner_indices[k - 1]) {
            throw DataError("corner indices must be strictly increasing");
        }
    }
    if (!polyline_simple(config.boundary, 1e-9)) {
        throw DataError("cloth boundary self-intersects");
    }
}

std::size_t side_segment_count(const ClothConfiguration& config, int side) {
    if (side < 0 || side > 3) throw DataError("side index must be in 0..3");
    const std::size_t n = config.boundary.vertices.size();
    const std::size_t from = config.corner_indices[side];
    const std::size_t to = side == 3 ? n : config.corner_indices[side + 1];
    return to - from;
}

std::array<Point3, 4> corner_points(const ClothConfiguration& config) {
    std::array<Point3, 4> corners;
    for (int k = 0; k < 4; ++k) {
        corners[k] = config.boundary.vertices[config.corner_indices[k]];
    }
    return corners;
}

EdgeSelection default_edge_selection(const ClothConfiguration& config) {
    validate_configuration(config);
    for (int side = 0; side < 4; ++side) {
        if (side_segment_count(config, side) < 4) {
            throw DataError("side too coarse: selected segments would collide");
        }
    }
    const std::size_t n = config.boundary.segment_count();
    std::set<std::size_t> picked;
    for (std::size_t corner : config.corner_indices) {
        picked.insert((corner + 1) % n);
        picked.insert((corner + n - 2) % n);
    }
    EdgeSelection selection;
    selection.segment_indices.assign(picked.begin(), picked.end());
    return selection;
}

bool DgliCoordinates::all_clamped() const {
    if (clamped.empty()) return false;
    return std::all_of(clamped.begin(), clamped.end(), [](bool c) { return c; });
}

std::size_t DgliCoordinates::pair_index(std::size_t i, std::size_t j) const {
    if (i >= j || j >= m) throw DataError("pair index out of range");
    return i * m - i * (i + 1) / 2 + (j - i - 1);
}

DgliCoordinates compute_coordinates(const ClothConfiguration& config,
                                    const EdgeSelection& selection,
                                    const PerturbationSpec& spec) {
    validate_configuration(config);
    validate(spec);
    const std::size_t m = selection.segment_indices.size();
    if (m < 2) throw DataError("edge selection needs at least two segments");
    const std::size_t n = config.boundary.segment_count();
    for (std::size_t idx : selection.segment_indices) {
        if (idx >= n) throw DataError("selected segment index out of range");
    }
    for (std::size_t i = 1; i < m; ++i) {
        if (selection.segment_indices[i] <= selection.segment_indices[i - 1]) {
            throw DataError("selected segment indices must be strictly increasing");
        }
    }

    std::vector<Segment> segments;
    segments.reserve(m);
    for (std::size_t idx : selection.segment_indices) {
        segments.push_back(config.boundary.segment(idx));
    }

    const std::size_t pairs = m * (m - 1) / 2;
    constexpr std::size_t kZeroed = static_cast<std::size_t>(-1);
    std::vector<std::size_t> slot(pairs, kZeroed);
    kernels::PairBatch batch;
    batch.reserve(2 * pairs);
    std::size_t p = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j, ++p) {
            const auto pp = detail::prepare_difference(segments[i], segments[j], spec);
            if (pp.zero) continue;
            slot[p] = batch.size();
            batch.push(pp.base1, pp.base2);
            batch.push(pp.plus1, pp.plus2);
        }
    }
    std::vector<double> g(batch.size());
    kernels::gli_batch(batch, g.data());

    DgliCoordinates coords;
    coords.m = m;
    coords.values.assign(pairs, 0.0);
    coords.clamped.assign(pairs, false);
    for (p = 0; p < pairs; ++p) {
        if (slot[p] == kZeroed) continue;
        const DgliValue v = detail::difference_quotient(g[slot[p] + 1], g[slot[p]],
                                                        spec.epsilon, spec);
        coords.values[p] = v.value;
        coords.clamped[p] = v.clamped;
    }
    return coords;
}

DgliCoordinates compute_coordinates(const ClothConfiguration& config,
                                    const PerturbationSpec& spec) {
    return compute_coordinates(config, default_edge_selection(config), spec);
}

}  // namespace dgli
