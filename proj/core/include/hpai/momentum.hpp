#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string_view>

namespace hpai {

/// Accumulated movement per body segment, in meters.
/// Component order is fixed everywhere: arm_r, arm_l, leg_r, leg_l.
struct MomentumVector {
    double arm_r = 0.0;
    double arm_l = 0.0;
    double leg_r = 0.0;
    double leg_l = 0.0;

    static constexpr std::size_t kSegments = 4;
    static constexpr std::array<std::string_view, kSegments> kSegmentNames = {
        "arm_r", "arm_l", "leg_r", "leg_l"};

    double& operator[](std::size_t i) { return (&arm_r)[i]; }
    const double& operator[](std::size_t i) const { return (&arm_r)[i]; }

    double sum() const { return arm_r + arm_l + leg_r + leg_l; }

    bool finite() const {
        return std::isfinite(arm_r) && std::isfinite(arm_l) &&
               std::isfinite(leg_r) && std::isfinite(leg_l);
    }

    bool non_negative() const {
        return arm_r >= 0.0 && arm_l >= 0.0 && leg_r >= 0.0 && leg_l >= 0.0;
    }

    MomentumVector& operator+=(const MomentumVector& o) {
        arm_r += o.arm_r;
        arm_l += o.arm_l;
        leg_r += o.leg_r;
        leg_l += o.leg_l;
        return *this;
    }

    friend MomentumVector operator+(MomentumVector a, const MomentumVector& b) {
        a += b;
        return a;
    }

    friend MomentumVector operator*(double k, const MomentumVector& v) {
        return {k * v.arm_r, k * v.arm_l, k * v.leg_r, k * v.leg_l};
    }

    friend bool operator==(const MomentumVector&, const MomentumVector&) = default;
};

/// Uniform vector, handy for symmetric idle drift.
inline MomentumVector uniform_momentum(double v) { return {v, v, v, v}; }

}  // namespace hpai
