#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "hpai/skeleton.hpp"
#include "hpai/tables.hpp"

namespace hpai {

using MotionSamples = std::map<std::string, std::vector<std::vector<SkeletonFrame>>>;

/// Per motion, the componentwise mean of accumulate_momentum over its sample
/// recordings. Throws IoError if a motion has no samples.
MotionDb build_motion_db(const MotionSamples& samples, const SegmentMap& segmap);

/// Looks up a motion, with an error that names it.
const MomentumVector& motion_momentum(const MotionDb& db, const std::string& motion);

/// JSON object: motion id -> {arm_r, arm_l, leg_r, leg_l}.
MotionDb load_motion_db(const std::filesystem::path& path);
void save_motion_db(const std::filesystem::path& path, const MotionDb& db);

/// Reads a sample directory tree (one subdirectory per motion, each holding
/// *.skel.csv recordings) and builds the database.
MotionDb build_motion_db_from_dir(const std::filesystem::path& samples_dir);

}  // namespace hpai
