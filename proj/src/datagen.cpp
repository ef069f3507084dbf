#include "dgli/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "dgli/error.hpp"

namespace dgli {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kOnHingeTol = 1e-12;
constexpr double kLayerGap = 1e-3;

double signed_distance(Vec3 dir, Point3 hinge, Point3 p) {
    return dir.x * (p.y - hinge.y) - dir.y * (p.x - hinge.x);
}

std::string format_index(const char* prefix, int width, std::size_t value) {
    char buf[32];
    if (width == 2) {
        std::snprintf(buf, sizeof buf, "%s%02zu", prefix, value);
    } else {
        std::snprintf(buf, sizeof buf, "%s%03zu", prefix, value);
    }
    return buf;
}

}  // namespace

ClothConfiguration make_flat(double width, double height,
                             std::size_t segments_per_side,
                             const std::string& name) {
    if (!(width > 0.0) || !(height > 0.0)) throw DataError("rectangle sides must be positive");
    if (segments_per_side < 1) throw DataError("need at least one segment per side");

    const std::size_t k = segments_per_side;
    ClothConfiguration config;
    config.name = name;
    config.boundary.closed = true;
    config.boundary.vertices.reserve(4 * k);
    const Point3 corners[4] = {{0.0, 0.0, 0.0},
                               {width, 0.0, 0.0},
                               {width, height, 0.0},
                               {0.0, height, 0.0}};
    for (int side = 0; side < 4; ++side) {
        const Point3 from = corners[side];
        const Point3 to = corners[(side + 1) % 4];
        for (std::size_t i = 0; i < k; ++i) {
            const double t = static_cast<double>(i) / static_cast<double>(k);
            config.boundary.vertices.push_back(from + (to - from) * t);
        }
        config.corner_indices[side] = side * k;
    }
    return config;
}

ClothConfiguration apply_fold(const ClothConfiguration& config, const FoldSpec& fold) {
    validate_configuration(config);
    const Vec3 dir_xy{fold.hinge_direction.x, fold.hinge_direction.y, 0.0};
    if (norm(dir_xy) < 1e-12) throw DataError("hinge direction must have an xy component");
    if (!(fold.angle >= 0.0) || fold.angle > kPi + 1e-12) {
        throw DataError("fold angle must be in [0, pi]");
    }
    if (fold.moving_side != 1 && fold.moving_side != -1) {
        throw DataError("moving side must be +1 or -1");
    }
    const bool complete = fold.angle >= kPi - 1e-9;
    if (complete && fold.layer_offset == 0.0) {
        throw DataError("complete fold needs a nonzero layer offset");
    }

    const Vec3 dir = normalized(dir_xy);
    const Point3 hinge{fold.hinge_point.x, fold.hinge_point.y, 0.0};
    const double side = static_cast<double>(fold.moving_side);

    // Split boundary segments where they cross the hinge so the fold bends
    // the boundary at vertices only.
    const std::vector<Point3>& old_vertices = config.boundary.vertices;
    const std::size_t n = old_vertices.size();
    std::vector<Point3> vertices;
    vertices.reserve(n + 8);
    std::array<std::size_t, 4> corners = config.corner_indices;
    std::array<std::size_t, 4> new_corners = corners;
    for (std::size_t i = 0; i < n; ++i) {
        for (int c = 0; c < 4; ++c) {
            if (corners[c] == i) new_corners[c] = vertices.size();
        }
        vertices.push_back(old_vertices[i]);
        const Point3 a = old_vertices[i];
        const Point3 b = old_vertices[(i + 1) % n];
        const double sa = signed_distance(dir, hinge, a);
        const double sb = signed_distance(dir, hinge, b);
        if ((sa > kOnHingeTol && sb < -kOnHingeTol) ||
            (sa < -kOnHingeTol && sb > kOnHingeTol)) {
            const double t = sa / (sa - sb);
            const Point3 crossing = a + (b - a) * t;
            if (norm(crossing - a) > 1e-9 && norm(crossing - b) > 1e-9) {
                vertices.push_back(crossing);
            }
        }
    }

    std::vector<bool> moving(vertices.size(), false);
    std::size_t moving_count = 0;
    double z_sum = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (side * signed_distance(dir, hinge, vertices[i]) > kOnHingeTol) {
            moving[i] = true;
            ++moving_count;
            z_sum += vertices[i].z;
        }
    }
    if (moving_count == 0) throw DataError("fold moves no part of the cloth");
    if (moving_count == vertices.size()) throw DataError("fold moves the whole cloth");

    const double z_hinge = z_sum / static_cast<double>(moving_count);
    const Point3 origin{hinge.x, hinge.y, z_hinge};
    const double theta = (fold.layer_offset >= 0.0 ? 1.0 : -1.0) * side * fold.angle;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (moving[i]) vertices[i] = rotate_about_axis(vertices[i], origin, dir, theta);
    }

    if (complete) {
        double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
        bool first = true;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (!moving[i]) continue;
            if (first) {
                min_x = max_x = vertices[i].x;
                min_y = max_y = vertices[i].y;
                first = false;
            } else {
                min_x = std::min(min_x, vertices[i].x);
                max_x = std::max(max_x, vertices[i].x);
                min_y = std::min(min_y, vertices[i].y);
                max_y = std::max(max_y, vertices[i].y);
            }
        }
        double landing = z_hinge;
        bool found = false;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (moving[i]) continue;
            const Point3& v = vertices[i];
            if (v.x < min_x - 1e-9 || v.x > max_x + 1e-9 || v.y < min_y - 1e-9 ||
                v.y > max_y + 1e-9) {
                continue;
            }
            if (!found) {
                landing = v.z;
                found = true;
            } else {
                landing = fold.layer_offset >= 0.0 ? std::max(landing, v.z)
                                                   : std::min(landing, v.z);
            }
        }
        const double target = landing + fold.layer_offset;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (moving[i]) vertices[i].z = target;
        }
    }

    ClothConfiguration out = config;
    out.boundary.vertices = std::move(vertices);
    out.corner_indices = new_corners;
    return out;
}

namespace {

FoldSpec corner_fold(int corner, double fraction, bool under) {
    const Point3 corners[4] = {{0.0, 0.0, 0.0},
                               {1.0, 0.0, 0.0},
                               {1.0, 1.0, 0.0},
                               {0.0, 1.0, 0.0}};
    const Point3 c = corners[corner];
    const Point3 prev = corners[(corner + 3) % 4];
    const Point3 next = corners[(corner + 1) % 4];
    const Point3 p1 = c + (prev - c) * fraction;
    const Point3 p2 = c + (next - c) * fraction;

    FoldSpec fold;
    fold.hinge_point = p1;
    fold.hinge_direction = normalized(p2 - p1);
    fold.moving_side =
        signed_distance(fold.hinge_direction, fold.hinge_point, c) > 0.0 ? 1 : -1;
    fold.angle = kPi;
    fold.layer_offset = under ? -kLayerGap : kLayerGap;
    return fold;
}

FoldSpec vertical_fold(double x, int moving_side, bool under) {
    FoldSpec fold;
    fold.hinge_point = {x, 0.0, 0.0};
    fold.hinge_direction = {0.0, 1.0, 0.0};
    // signed distance along this hinge is -(p.x - x): left of the line is x < hinge x.
    fold.moving_side = moving_side;
    fold.angle = kPi;
    fold.layer_offset = under ? -kLayerGap : kLayerGap;
    return fold;
}

FoldSpec diagonal_fold(bool under) {
    FoldSpec fold;
    fold.hinge_point = {1.0, 0.0, 0.0};
    fold.hinge_direction = normalized(Vec3{-1.0, 1.0, 0.0});
    // Moving half contains corner (1,1).
    fold.moving_side =
        signed_distance(fold.hinge_direction, fold.hinge_point, {1.0, 1.0, 0.0}) > 0.0
            ? 1
            : -1;
    fold.angle = kPi;
    fold.layer_offset = under ? -kLayerGap : kLayerGap;
    return fold;
}

// Systematic per-class hinge tweaks.  Classes that fold the same region over
// versus under are z-mirrors of each other, so every distance-based feature
// sees identical rank structure and class centroids collapse onto one
// another.  Giving each twin its own slight hinge rotation or offset keeps
// the silhouettes while making the expected orderings distinct.
FoldSpec tilted(FoldSpec fold, double angle, const Point3& pivot) {
    fold.hinge_direction = rotate_z(fold.hinge_direction, angle);
    fold.hinge_point = pivot + rotate_z(fold.hinge_point - pivot, angle);
    return fold;
}

FoldSpec shifted(FoldSpec fold, double offset) {
    const Vec3 normal{-fold.hinge_direction.y, fold.hinge_direction.x, 0.0};
    fold.hinge_point = fold.hinge_point + normal * offset;
    return fold;
}

}  // namespace

ClassRecipe class_recipe(int class_id) {
    ClassRecipe recipe;
    recipe.label = format_index("", 2, static_cast<std::size_t>(class_id));
    switch (class_id) {
        case 1:
            recipe.description = "flat";
            recipe.jitter = 0.0;
            break;
        case 2:
            recipe.description = "upper-left corner folded on top";
            recipe.folds = {tilted(corner_fold(3, 0.35, false), 0.05, {0.175, 0.825, 0.0})};
            break;
        case 3:
            recipe.description = "diagonal fold on top";
            recipe.folds = {tilted(shifted(diagonal_fold(false), -0.065), 0.035,
                                   {0.5, 0.5, 0.0})};
            recipe.jitter = 0.015;
            break;
        case 4:
            recipe.description = "upper-right corner slightly lifted";
            recipe.folds = {corner_fold(2, 0.30, false)};
            recipe.folds[0].angle = 0.45;
            recipe.jitter = 0.04;
            break;
        case 5:
            recipe.description = "both lower corners folded on top, flaps apart";
            recipe.folds = {corner_fold(0, 0.30, false), corner_fold(1, 0.30, false)};
            recipe.jitter = 0.02;
            recipe.orientation_spread = 0.25;
            break;
        case 6:
            recipe.description = "folded in half on top";
            recipe.folds = {tilted(vertical_fold(0.55, -1, false), 0.04, {0.55, 0.5, 0.0})};
            break;
        case 7:
            recipe.description = "lower-right corner folded far on top";
            recipe.folds = {corner_fold(1, 0.50, false)};
            recipe.orientation_spread = 0.15;
            break;
        case 8:
            recipe.description = "opposite corners folded on top";
            recipe.folds = {corner_fold(0, 0.35, false), corner_fold(2, 0.35, false)};
            recipe.jitter = 0.02;
            recipe.orientation_spread = 0.15;
            break;
        case 9:
            recipe.description = "upper-right corner folded under";
            recipe.folds = {corner_fold(2, 0.35, true)};
            break;
        case 10:
            recipe.description = "upper-left corner folded under";
            recipe.folds = {tilted(corner_fold(3, 0.35, true), -0.05, {0.175, 0.825, 0.0})};
            break;
        case 11:
            recipe.description = "diagonal fold under";
            recipe.folds = {tilted(shifted(diagonal_fold(true), -0.065), -0.035,
                                   {0.5, 0.5, 0.0})};
            recipe.jitter = 0.015;
            break;
        case 12:
            recipe.description = "folded in half underneath";
            recipe.folds = {tilted(vertical_fold(0.45, -1, true), 0.04, {0.45, 0.5, 0.0})};
            break;
        default:
            throw DataError("class id must be in 1..12");
    }
    return recipe;
}

namespace {

FoldSpec jittered(const FoldSpec& fold, double d_angle, double d_shift,
                  double d_orientation) {
    FoldSpec out = fold;
    if (out.angle < kPi - 1e-9) {
        out.angle = std::clamp(out.angle + d_angle, 0.0, kPi);
    }
    Vec3 dir = normalized(Vec3{out.hinge_direction.x, out.hinge_direction.y, 0.0});
    Point3 point = out.hinge_point;
    if (d_orientation != 0.0) {
        // Pivot where the hinge passes closest to the cloth center, so a
        // rotated hinge still crosses the same neighborhood.
        const Point3 center{0.5, 0.5, 0.0};
        const Point3 pivot = point + dir * dot(dir, center - point);
        dir = rotate_z(dir, d_orientation);
        point = pivot + rotate_z(point - pivot, d_orientation);
    }
    const Vec3 normal{-dir.y, dir.x, 0.0};
    out.hinge_direction = dir;
    out.hinge_point = point + normal * d_shift;
    return out;
}

}  // namespace

std::vector<ClothConfiguration> generate_class(const ClassRecipe& recipe,
                                               std::size_t count,
                                               std::uint64_t seed) {
    if (recipe.label.empty()) throw DataError("class recipe needs a label");
    Rng rng(seed);
    std::vector<ClothConfiguration> samples;
    samples.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        const double orientation =
            recipe.orientation_spread *
            (static_cast<double>(s % 3) - 1.0);
        bool accepted = false;
        for (int attempt = 0; attempt < 32 && !accepted; ++attempt) {
            ClothConfiguration config =
                make_flat(1.0, 1.0, 5, format_index(("class_" + recipe.label + "_s").c_str(), 2, s));
            config.class_label = recipe.label;
            try {
                for (const FoldSpec& fold : recipe.folds) {
                    const double d_angle = rng.uniform(-recipe.jitter, recipe.jitter);
                    const double d_shift = rng.uniform(-recipe.jitter, recipe.jitter);
                    config = apply_fold(config, jittered(fold, d_angle, d_shift, orientation));
                }
                validate_configuration(config);
                default_edge_selection(config);
                samples.push_back(std::move(config));
                accepted = true;
            } catch (const DataError&) {
                // Rejected draw; retry with fresh jitter.
            }
        }
        if (!accepted) {
            throw DataError("could not generate a valid sample for class " + recipe.label);
        }
    }
    return samples;
}

SequenceRecipe builtin_sequence(int sequence_id) {
    SequenceRecipe recipe;
    switch (sequence_id) {
        case 1:
            recipe.name = "seq1";
            recipe.description = "fold two opposite corners, one after the other";
            recipe.folds = {corner_fold(0, 0.35, false), corner_fold(2, 0.35, false)};
            break;
        case 2:
            recipe.name = "seq2";
            recipe.description = "fold all four corners inwards";
            recipe.folds = {corner_fold(0, 0.30, false), corner_fold(1, 0.30, false),
                            corner_fold(2, 0.30, false), corner_fold(3, 0.30, false)};
            break;
        case 3:
            recipe.name = "seq3";
            recipe.description = "fold the cloth in half";
            recipe.folds = {vertical_fold(0.5, -1, false)};
            break;
        default:
            throw DataError("sequence id must be in 1..3");
    }
    return recipe;
}

std::vector<ClothConfiguration> generate_sequence(const SequenceRecipe& recipe,
                                                  std::size_t frames_per_fold) {
    if (frames_per_fold < 2) throw DataError("need at least two frames per fold");
    if (recipe.folds.empty()) throw DataError("sequence recipe has no folds");

    std::vector<ClothConfiguration> frames;
    std::size_t frame_index = 0;
    for (std::size_t k = 0; k < recipe.folds.size(); ++k) {
        const std::size_t j_begin = k == 0 ? 0 : 1;
        for (std::size_t j = j_begin; j < frames_per_fold; ++j) {
            const double angle =
                kPi * static_cast<double>(j) / static_cast<double>(frames_per_fold - 1);
            ClothConfiguration config =
                make_flat(1.0, 1.0, 5, format_index((recipe.name + "_f").c_str(), 3, frame_index));
            for (std::size_t prev = 0; prev < k; ++prev) {
                config = apply_fold(config, recipe.folds[prev]);
            }
            if (angle > 0.0) {
                FoldSpec fold = recipe.folds[k];
                fold.angle = angle;
                config = apply_fold(config, fold);
            }
            config.frame_index = static_cast<int>(frame_index);
            validate_configuration(config);
            frames.push_back(std::move(config));
            ++frame_index;
        }
    }
    return frames;
}

}  // namespace dgli
