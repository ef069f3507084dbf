#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dgli/cloth.hpp"

namespace dgli {

// Uniform doubles built from raw mt19937_64 output so streams are
// reproducible across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    // Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

  private:
    std::mt19937_64 engine_;
};

struct FoldSpec {
    Point3 hinge_point;        // z component ignored
    Vec3 hinge_direction;      // xy direction of the hinge line
    double angle = 3.141592653589793238462643383279502884;
    int moving_side = 1;       // +1 folds the left half-plane, -1 the right
    double layer_offset = 1e-3;  // signed stacking gap for complete folds
};

// Axis-aligned rectangle in the z=0 plane, corner 0 at the origin,
// counter-clockwise, `segments_per_side` boundary segments on each side.
ClothConfiguration make_flat(double width, double height,
                             std::size_t segments_per_side,
                             const std::string& name = "flat");

// Kinematic fold: vertices on the moving side rotate about the hinge line.
// Boundary segments crossing the hinge are split at the crossing first, so
// every segment keeps its length.  A complete fold (angle == pi) drops the
// flap onto the highest (or, for negative offsets, below the lowest) layer
// it covers, separated by layer_offset.
ClothConfiguration apply_fold(const ClothConfiguration& config, const FoldSpec& fold);

struct ClassRecipe {
    std::string label;
    std::string description;
    std::vector<FoldSpec> folds;
    double jitter = 0.03;             // fold angle (rad) and hinge shift (fraction of side)
    double orientation_spread = 0.0;  // hinge rotation between sample subgroups (rad)
};

// The twelve built-in fold classes, ids 1..12.
ClassRecipe class_recipe(int class_id);

// `count` jittered samples of one class.  Complete folds keep angle == pi;
// partial folds jitter the angle, all folds jitter the hinge position, and
// recipes with orientation spread rotate the hinges per sample subgroup
// (sample index mod 3).  Invalid draws are rejected and retried.
std::vector<ClothConfiguration> generate_class(const ClassRecipe& recipe,
                                               std::size_t count,
                                               std::uint64_t seed);

struct SequenceRecipe {
    std::string name;
    std::string description;
    std::vector<FoldSpec> folds;
};

// The three built-in fold sequences, ids 1..3.
SequenceRecipe builtin_sequence(int sequence_id);

// Frames animating the recipe's folds one after another; each fold's angle
// is interpolated from 0 to pi over frames_per_fold frames.  Frame 0 is the
// flat configuration.
std::vector<ClothConfiguration> generate_sequence(const SequenceRecipe& recipe,
                                                  std::size_t frames_per_fold);

}  // namespace dgli
