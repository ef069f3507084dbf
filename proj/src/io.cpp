#include "dgli/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dgli/error.hpp"

namespace dgli {

namespace {

using nlohmann::json;

json to_json(const ClothConfiguration& config) {
    json j;
    j["name"] = config.name;
    j["closed"] = config.boundary.closed;
    json vertices = json::array();
    for (const Point3& v : config.boundary.vertices) {
        vertices.push_back(json::array({v.x, v.y, v.z}));
    }
    j["vertices"] = std::move(vertices);
    j["corner_indices"] = config.corner_indices;
    if (config.class_label) j["class"] = *config.class_label;
    if (config.frame_index) j["frame"] = *config.frame_index;
    return j;
}

ClothConfiguration from_json(const json& j, const std::string& origin) {
    try {
        ClothConfiguration config;
        config.name = j.at("name").get<std::string>();
        config.boundary.closed = j.at("closed").get<bool>();
        for (const json& vertex : j.at("vertices")) {
            if (!vertex.is_array() || vertex.size() != 3) {
                throw DataError(origin + ": vertex must be a 3-element array");
            }
            config.boundary.vertices.push_back(
                {vertex[0].get<double>(), vertex[1].get<double>(), vertex[2].get<double>()});
        }
        const json& corners = j.at("corner_indices");
        if (!corners.is_array() || corners.size() != 4) {
            throw DataError(origin + ": corner_indices must have 4 entries");
        }
        for (int k = 0; k < 4; ++k) {
            config.corner_indices[k] = corners[k].get<std::size_t>();
        }
        if (j.contains("class")) config.class_label = j.at("class").get<std::string>();
        if (j.contains("frame")) config.frame_index = j.at("frame").get<int>();
        return config;
    } catch (const json::exception& e) {
        throw DataError(origin + ": " + e.what());
    }
}

json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot write " + path.string());
        out << text;
        if (!out) throw DataError("cannot write " + path.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw DataError("cannot create " + path.string());
    }
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace

ClothConfiguration load_configuration(const std::filesystem::path& path) {
    ClothConfiguration config = from_json(parse_file(path), path.string());
    validate_configuration(config);
    return config;
}

void save_configuration(const std::filesystem::path& path,
                        const ClothConfiguration& config) {
    write_text(path, to_json(config).dump(2) + "\n");
}

std::vector<ClothConfiguration> load_manifest(const std::filesystem::path& path) {
    const json j = parse_file(path);
    if (!j.contains("entries") || !j.at("entries").is_array()) {
        throw DataError(path.string() + ": manifest needs an entries array");
    }
    const std::filesystem::path base = path.parent_path();
    std::vector<ClothConfiguration> configs;
    for (const json& entry : j.at("entries")) {
        if (!entry.contains("path")) {
            throw DataError(path.string() + ": manifest entry without path");
        }
        const std::filesystem::path config_path =
            base / entry.at("path").get<std::string>();
        ClothConfiguration config = load_configuration(config_path);
        if (entry.contains("class")) {
            config.class_label = entry.at("class").get<std::string>();
        }
        configs.push_back(std::move(config));
    }
    if (configs.empty()) throw DataError(path.string() + ": manifest is empty");
    return configs;
}

std::filesystem::path save_dataset(const std::filesystem::path& directory,
                                   const std::vector<ClothConfiguration>& configs) {
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) throw DataError("cannot create directory " + directory.string());

    json entries = json::array();
    for (const ClothConfiguration& config : configs) {
        if (config.name.empty()) throw DataError("configuration without a name");
        const std::string filename = config.name + ".json";
        save_configuration(directory / filename, config);
        json entry;
        entry["path"] = filename;
        if (config.class_label) entry["class"] = *config.class_label;
        entries.push_back(std::move(entry));
    }
    json manifest;
    manifest["entries"] = std::move(entries);
    const std::filesystem::path manifest_path = directory / "manifest.json";
    write_text(manifest_path, manifest.dump(2) + "\n");
    return manifest_path;
}

void write_matrix_csv(const std::filesystem::path& path, const ConfusionMatrix& matrix) {
    std::ostringstream out;
    out << "id";
    for (const std::string& id : matrix.ids) out << ',' << id;
    out << '\n';
    const std::size_t n = matrix.size();
    for (std::size_t i = 0; i < n; ++i) {
        out << matrix.ids[i];
        for (std::size_t j = 0; j < n; ++j) {
            out << ',' << format_value(matrix.at(i, j));
        }
        out << '\n';
    }
    write_text(path, out.str());
}

void write_values_csv(const std::filesystem::path& path,
                      const std::vector<NamedValue>& values) {
    std::ostringstream out;
    out << "representation,metric,value\n";
    for (const NamedValue& v : values) {
        out << v.representation << ',' << v.metric << ',' << format_value(v.value)
            << '\n';
    }
    write_text(path, out.str());
}

namespace {

struct Rgb {
    int r, g, b;
};

Rgb ramp(double t) {
    // Light to dark blue.
    const double r = 247.0 + (8.0 - 247.0) * t;
    const double g = 251.0 + (48.0 - 251.0) * t;
    const double b = 255.0 + (107.0 - 255.0) * t;
    return {static_cast<int>(r + 0.5), static_cast<int>(g + 0.5),
            static_cast<int>(b + 0.5)};
}

std::string hex_color(Rgb c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

}  // namespace

void write_heatmap_svg(const std::filesystem::path& path, const ConfusionMatrix& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) throw DataError("empty matrix");
    double lo = matrix.entries[0], hi = matrix.entries[0];
    for (double v : matrix.entries) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi - lo;

    const double grid = 720.0;
    const double margin = 20.0;
    const double bar_width = 24.0;
    const double bar_gap = 24.0;
    const double cell = grid / static_cast<double>(n);
    const double width = margin * 2 + grid + bar_gap + bar_width + 70.0;
    const double height = margin * 2 + grid;

    std::ostringstream out;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
                  "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  width, height, width, height);
    out << buf;
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = matrix.at(i, j);
            const double t = span > 0.0 ? (v - lo) / span : 0.0;
            std::snprintf(buf, sizeof buf,
                          "<rect x=\"%.3f\" y=\"%.3f\" width=\"%.3f\" height=\"%.3f\" "
                          "fill=\"%s\"/>\n",
                          margin + cell * static_cast<double>(j),
                          margin + cell * static_cast<double>(i), cell, cell,
                          hex_color(ramp(t)).c_str());
            out << buf;
        }
    }
    // Scale bar, dark on top.
    const int steps = 32;
    const double bar_x = margin + grid + bar_gap;
    for (int s = 0; s < steps; ++s) {
        const double t = 1.0 - static_cast<double>(s) / (steps - 1);
        const double y = margin + grid * static_cast<double>(s) / steps;
        std::snprintf(buf, sizeof buf,
                      "<rect x=\"%.3f\" y=\"%.3f\" width=\"%.3f\" height=\"%.3f\" "
                      "fill=\"%s\"/>\n",
                      bar_x, y, bar_width, grid / steps + 0.5, hex_color(ramp(t)).c_str());
        out << buf;
    }
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.3f\" y=\"%.3f\" font-family=\"sans-serif\" "
                  "font-size=\"14\">%s</text>\n",
                  bar_x + bar_width + 6.0, margin + 12.0, format_value(hi).c_str());
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.3f\" y=\"%.3f\" font-family=\"sans-serif\" "
                  "font-size=\"14\">%s</text>\n",
                  bar_x + bar_width + 6.0, margin + grid, format_value(lo).c_str());
    out << buf;
    out << "</svg>\n";
    write_text(path, out.str());
}

}  // namespace dgli
