#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hpai/momentum.hpp"

namespace hpai {

/// The 20 tracked joints, in canonical stream order.
enum class Joint : int {
    head,
    shoulder_center,
    shoulder_l,
    shoulder_r,
    elbow_l,
    elbow_r,
    wrist_l,
    wrist_r,
    hand_l,
    hand_r,
    spine,
    hip_center,
    hip_l,
    hip_r,
    knee_l,
    knee_r,
    ankle_l,
    ankle_r,
    foot_l,
    foot_r,
};

inline constexpr int kJointCount = 20;

std::string_view joint_name(Joint j);
std::optional<Joint> joint_from_name(std::string_view name);

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend bool operator==(const Vec3&, const Vec3&) = default;
    double norm() const;
};

double distance(const Vec3& a, const Vec3& b);

/// One timestamped capture of all 20 joint positions, in meters.
struct SkeletonFrame {
    double t = 0.0;
    std::array<Vec3, kJointCount> joints{};

    Vec3& operator[](Joint j) { return joints[size_t(j)]; }
    const Vec3& operator[](Joint j) const { return joints[size_t(j)]; }
};

/// Joints grouped into the four momentum segments. Arms carry shoulder
/// through hand (4 joints), legs knee through foot (3); hips and the two
/// center joints count as body center and contribute to no segment.
struct SegmentMap {
    std::array<std::vector<Joint>, MomentumVector::kSegments> segments;

    static const SegmentMap& standard();
};

/// Subtracts shoulder_center from every upper-body joint and hip_center from
/// every lower-body joint, making the frame invariant to standing position.
SkeletonFrame localize_frame(const SkeletonFrame& frame);

/// Per-segment sum of 3D Euclidean joint displacements between two
/// consecutive frames. Expects localized frames.
MomentumVector segment_displacement(const SkeletonFrame& prev, const SkeletonFrame& cur,
                                    const SegmentMap& segmap);

/// Total per-segment movement over a stream: frames are localized, then
/// displacements of all consecutive pairs are summed. A single frame yields
/// the zero vector. Throws IoError on an empty stream or non-increasing
/// timestamps.
MomentumVector accumulate_momentum(std::span<const SkeletonFrame> frames,
                                   const SegmentMap& segmap);

/// .skel.csv: header `t,<joint>_x,<joint>_y,<joint>_z` over the canonical
/// joint order, one row per frame.
std::vector<SkeletonFrame> parse_skeleton_csv(std::istream& in, const std::string& origin);
std::vector<SkeletonFrame> read_skeleton_csv(const std::filesystem::path& path);
void write_skeleton_csv(const std::filesystem::path& path, std::span<const SkeletonFrame> frames);

}  // namespace hpai
