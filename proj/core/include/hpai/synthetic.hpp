#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hpai/momentum.hpp"
#include "hpai/skeleton.hpp"
#include "hpai/tables.hpp"

namespace hpai {

/// The 24-motion reference vocabulary with its committed per-segment
/// momentum targets. Generated recordings average exactly to these rows.
struct MotionTarget {
    std::string id;
    MomentumVector momentum;
};

const std::vector<MotionTarget>& reference_motions();

/// Target row for one motion id; throws ConfigError for unknown ids.
const MomentumVector& reference_momentum(const std::string& motion);

/// MotionDb holding the committed targets directly (what data/motiondb.json
/// contains); build_motion_db over synth_motion_samples reproduces it.
MotionDb reference_motion_db();

/// One synthetic 25 fps recording whose accumulated momentum equals
/// `scale * target` exactly (up to double rounding). Joints of each segment
/// oscillate around a committed standing pose; a whole-body sway is mixed in
/// and removed again by coordinate localization.
std::vector<SkeletonFrame> synth_recording(const MomentumVector& target, double scale,
                                           std::uint64_t seed, int frames = 76);

/// The three samples recorded for one motion. Scales {1.08, 0.92, 1.00} make
/// the mean equal the target while keeping samples distinct.
std::vector<std::vector<SkeletonFrame>> synth_motion_samples(const MomentumVector& target,
                                                             std::uint64_t seed);

/// Writes the full reference dataset: one subdirectory per motion, three
/// .skel.csv recordings each. Deterministic: same tree on every call.
void write_reference_samples(const std::filesystem::path& out_dir);

}  // namespace hpai
