#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dgli/analysis.hpp"
#include "dgli/cloth.hpp"

namespace dgli {

// JSON object with name, closed, vertices, corner_indices and optional
// class / frame fields.  Vertices round-trip exactly.
ClothConfiguration load_configuration(const std::filesystem::path& path);
void save_configuration(const std::filesystem::path& path,
                        const ClothConfiguration& config);

// Manifest: {"entries": [{"path": "a.json", "class": "01"}, ...]} with
// paths relative to the manifest location.  A manifest "class" overrides
// the one stored in the configuration file.
std::vector<ClothConfiguration> load_manifest(const std::filesystem::path& path);

// Writes one JSON file per configuration plus manifest.json; returns the
// manifest path.
std::filesystem::path save_dataset(const std::filesystem::path& directory,
                                   const std::vector<ClothConfiguration>& configs);

// CSV with an id header row/column; entries use 9 significant digits.
void write_matrix_csv(const std::filesystem::path& path, const ConfusionMatrix& matrix);

struct NamedValue {
    std::string representation;
    std::string metric;
    double value = 0.0;
};

void write_values_csv(const std::filesystem::path& path,
                      const std::vector<NamedValue>& values);

// Heatmap with a linear two-color ramp and a scale bar.
void write_heatmap_svg(const std::filesystem::path& path, const ConfusionMatrix& matrix);

}  // namespace dgli
