#include "hpai/synthetic.hpp"

#include <cmath>

#include "hpai/errors.hpp"
#include "hpai/io.hpp"
#include "hpai/rng.hpp"

namespace hpai {

namespace {

// Standing pose, meters, origin between the feet. Kinect-like proportions.
constexpr std::array<Vec3, kJointCount> kBasePose = {{
    {0.00, 1.72, 0.00},   // head
    {0.00, 1.48, 0.00},   // shoulder_center
    {-0.19, 1.46, 0.00},  // shoulder_l
    {0.19, 1.46, 0.00},   // shoulder_r
    {-0.25, 1.20, 0.02},  // elbow_l
    {0.25, 1.20, 0.02},   // elbow_r
    {-0.28, 0.98, 0.05},  // wrist_l
    {0.28, 0.98, 0.05},   // wrist_r
    {-0.30, 0.90, 0.08},  // hand_l
    {0.30, 0.90, 0.08},   // hand_r
    {0.00, 1.18, 0.00},   // spine
    {0.00, 0.96, 0.00},   // hip_center
    {-0.11, 0.94, 0.00},  // hip_l
    {0.11, 0.94, 0.00},   // hip_r
    {-0.12, 0.52, 0.01},  // knee_l
    {0.12, 0.52, 0.01},   // knee_r
    {-0.13, 0.08, 0.02},  // ankle_l
    {0.13, 0.08, 0.02},   // ankle_r
    {-0.13, 0.02, 0.12},  // foot_l
    {0.13, 0.02, 0.12},   // foot_r
}};

MomentumVector mirror(const MomentumVector& v) { return {v.arm_l, v.arm_r, v.leg_l, v.leg_r}; }

std::vector<MotionTarget> make_reference_motions() {
    // Anchor rows first; heavy variants run 1.3x their light counterpart,
    // mirrored motions swap left/right components.
    const MomentumVector right_punch = {5.83, 0.49, 0.51, 0.38};
    const MomentumVector left_kick = {1.47, 1.68, 1.08, 6.42};
    const MomentumVector crouch = {2.25, 2.11, 2.95, 3.04};
    const MomentumVector right_kick = mirror(left_kick);

    std::vector<MotionTarget> rows;
    rows.push_back({"Right Punch", right_punch});
    rows.push_back({"Left Punch", mirror(right_punch)});
    rows.push_back({"Right Heavy Punch", {7.58, 0.64, 0.66, 0.49}});
    rows.push_back({"Left Heavy Punch", {0.64, 7.58, 0.49, 0.66}});
    rows.push_back({"Right Kick", right_kick});
    rows.push_back({"Left Kick", left_kick});
    rows.push_back({"Right Heavy Kick", {2.18, 1.91, 8.35, 1.40}});
    rows.push_back({"Left Heavy Kick", {1.91, 2.18, 1.40, 8.35}});
    rows.push_back({"Right Uppercut", {6.44, 0.72, 0.98, 0.61}});
    rows.push_back({"Left Uppercut", {0.72, 6.44, 0.61, 0.98}});
    rows.push_back({"Right Elbow Strike", {3.94, 0.66, 0.58, 0.44}});
    rows.push_back({"Left Elbow Strike", {0.66, 3.94, 0.44, 0.58}});
    rows.push_back({"Right Knee Strike", {1.12, 1.05, 5.20, 0.93}});
    rows.push_back({"Left Knee Strike", {1.05, 1.12, 0.93, 5.20}});
    rows.push_back({"Right Throw", {4.12, 2.95, 0.87, 0.82}});
    rows.push_back({"Left Throw", {2.95, 4.12, 0.82, 0.87}});
    rows.push_back({"Crouch", crouch});
    rows.push_back({"Jump", {1.85, 1.87, 3.66, 3.71}});
    rows.push_back({"Guard", {0.74, 0.78, 0.32, 0.30}});
    rows.push_back({"Step Forward", {0.92, 0.95, 1.74, 1.69}});
    rows.push_back({"Step Back", {0.88, 0.90, 1.62, 1.66}});
    rows.push_back({"Right Side Step", {0.81, 0.77, 2.10, 1.95}});
    rows.push_back({"Left Side Step", {0.77, 0.81, 1.95, 2.10}});
    rows.push_back({"Stand Still", {0.08, 0.08, 0.05, 0.05}});
    return rows;
}

}  // namespace

const std::vector<MotionTarget>& reference_motions() {
    static const std::vector<MotionTarget> rows = make_reference_motions();
    return rows;
}

const MomentumVector& reference_momentum(const std::string& motion) {
    for (const auto& row : reference_motions())
        if (row.id == motion) return row.momentum;
    throw ConfigError("unknown reference motion '" + motion + "'");
}

MotionDb reference_motion_db() {
    MotionDb db;
    for (const auto& row : reference_motions()) db[row.id] = row.momentum;
    return db;
}

std::vector<SkeletonFrame> synth_recording(const MomentumVector& target, double scale,
                                           std::uint64_t seed, int frames) {
    if (frames < 2) throw ConfigError("synthetic recording needs at least 2 frames");
    const auto& segmap = SegmentMap::standard();
    const int steps = frames - 1;
    const double dt = 1.0 / 25.0;

    // Per-joint oscillation amplitude: each step moves the joint by exactly
    // its share of the segment target along one axis.
    std::array<double, kJointCount> amp{};
    std::array<int, kJointCount> axis{};
    for (size_t s = 0; s < MomentumVector::kSegments; ++s) {
        const auto& joints = segmap.segments[s];
        const double per_joint = scale * target[s] / double(joints.size()) / double(steps);
        for (size_t k = 0; k < joints.size(); ++k) {
            amp[size_t(joints[k])] = per_joint;
            axis[size_t(joints[k])] = int(k % 3);
        }
    }

    // Whole-body sway; localization removes it exactly, so momentum is
    // unaffected, but raw coordinates look like a person shifting weight.
    Rng rng(seed);
    const double sway_amp = 0.01 + 0.04 * rng.next_double();
    const int sway_period = 16 + rng.uniform_int(16);

    std::vector<SkeletonFrame> rec(size_t(frames));
    for (int i = 0; i < frames; ++i) {
        SkeletonFrame& f = rec[size_t(i)];
        f.t = double(i) * dt;
        const int phase = i % sway_period;
        const double tri = std::abs(phase - sway_period / 2) / double(sway_period / 2);
        const Vec3 sway{sway_amp * tri, 0.0, sway_amp * (1.0 - tri) * 0.5};
        for (int j = 0; j < kJointCount; ++j) {
            Vec3 p = kBasePose[size_t(j)] + sway;
            if (amp[size_t(j)] != 0.0 && (i % 2) == 1) {
                double* coord = axis[size_t(j)] == 0 ? &p.x : axis[size_t(j)] == 1 ? &p.y : &p.z;
                *coord += amp[size_t(j)];
            }
            f.joints[size_t(j)] = p;
        }
    }
    return rec;
}

std::vector<std::vector<SkeletonFrame>> synth_motion_samples(const MomentumVector& target,
                                                             std::uint64_t seed) {
    static constexpr std::array<double, 3> kScales = {1.08, 0.92, 1.00};
    std::vector<std::vector<SkeletonFrame>> samples;
    for (size_t k = 0; k < kScales.size(); ++k)
        samples.push_back(synth_recording(target, kScales[k], mix_seed(seed, k)));
    return samples;
}

void write_reference_samples(const std::filesystem::path& out_dir) {
    for (const auto& row : reference_motions()) {
        auto samples = synth_motion_samples(row.momentum, hash_str(row.id));
        auto motion_dir = out_dir / row.id;
        ensure_dir(motion_dir);
        for (size_t k = 0; k < samples.size(); ++k)
            write_skeleton_csv(motion_dir / ("sample_" + std::to_string(k + 1) + ".skel.csv"),
                               samples[k]);
    }
}

}  // namespace hpai
