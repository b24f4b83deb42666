#include "hpai/motion_db.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "hpai/errors.hpp"
#include "hpai/io.hpp"

namespace hpai {

using nlohmann::json;

MotionDb build_motion_db(const MotionSamples& samples, const SegmentMap& segmap) {
    MotionDb db;
    for (const auto& [motion, recordings] : samples) {
        if (recordings.empty())
            throw IoError("motion '" + motion + "' has no sample recordings");
        MomentumVector mean;
        for (const auto& rec : recordings) mean += accumulate_momentum(rec, segmap);
        db[motion] = (1.0 / double(recordings.size())) * mean;
    }
    return db;
}

const MomentumVector& motion_momentum(const MotionDb& db, const std::string& motion) {
    auto it = db.find(motion);
    if (it == db.end()) throw ConfigError("motion '" + motion + "' not present in motion database");
    return it->second;
}

MotionDb load_motion_db(const std::filesystem::path& path) {
    json doc;
    try {
        doc = json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw IoError("bad motion database " + path.string() + ": " + e.what());
    }
    if (!doc.is_object()) throw IoError("motion database must be a JSON object: " + path.string());
    MotionDb db;
    for (const auto& [motion, row] : doc.items()) {
        MomentumVector mm;
        for (size_t s = 0; s < MomentumVector::kSegments; ++s) {
            std::string key(MomentumVector::kSegmentNames[s]);
            if (!row.contains(key) || !row[key].is_number())
                throw IoError("motion database " + path.string() + ": motion '" + motion +
                              "' missing numeric field '" + key + "'");
            mm[s] = row[key].get<double>();
        }
        if (!mm.finite() || !mm.non_negative())
            throw IoError("motion database " + path.string() + ": motion '" + motion +
                          "' has a negative or non-finite momentum");
        db[motion] = mm;
    }
    return db;
}

void save_motion_db(const std::filesystem::path& path, const MotionDb& db) {
    json doc = json::object();
    for (const auto& [motion, mm] : db) {
        json row = json::object();
        for (size_t s = 0; s < MomentumVector::kSegments; ++s)
            row[std::string(MomentumVector::kSegmentNames[s])] = mm[s];
        doc[motion] = row;
    }
    write_text_file(path, doc.dump(2) + "\n");
}

MotionDb build_motion_db_from_dir(const std::filesystem::path& samples_dir) {
    if (!std::filesystem::is_directory(samples_dir))
        throw IoError("sample directory does not exist: " + samples_dir.string());
    MotionSamples samples;
    std::vector<std::filesystem::path> motion_dirs;
    for (const auto& entry : std::filesystem::directory_iterator(samples_dir))
        if (entry.is_directory()) motion_dirs.push_back(entry.path());
    std::sort(motion_dirs.begin(), motion_dirs.end());
    for (const auto& dir : motion_dirs) {
        std::vector<std::filesystem::path> files;
        for (const auto& f : std::filesystem::directory_iterator(dir))
            if (f.is_regular_file() && f.path().string().ends_with(".skel.csv"))
                files.push_back(f.path());
        std::sort(files.begin(), files.end());
        auto& recs = samples[dir.filename().string()];
        for (const auto& f : files) recs.push_back(read_skeleton_csv(f));
        if (recs.empty())
            throw IoError("motion '" + dir.filename().string() + "' has no *.skel.csv samples in " +
                          dir.string());
    }
    if (samples.empty()) throw IoError("no motion subdirectories under " + samples_dir.string());
    return build_motion_db(samples, SegmentMap::standard());
}

}  // namespace hpai
