#include "hpai/skeleton.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "hpai/errors.hpp"
#include "hpai/io.hpp"

namespace hpai {

namespace {

constexpr std::array<std::string_view, kJointCount> kJointNames = {
    "head",    "shoulder_center", "shoulder_l", "shoulder_r", "elbow_l",
    "elbow_r", "wrist_l",         "wrist_r",    "hand_l",     "hand_r",
    "spine",   "hip_center",      "hip_l",      "hip_r",      "knee_l",
    "knee_r",  "ankle_l",         "ankle_r",    "foot_l",     "foot_r",
};

// Joints re-centered on shoulder_center; everything else re-centers on hip_center.
constexpr std::array<bool, kJointCount> kUpperBody = {
    true,  true,  true,  true,  true,  true,  true,  true,  true,  true,
    true,  false, false, false, false, false, false, false, false, false,
};

}  // namespace

std::string_view joint_name(Joint j) { return kJointNames[size_t(j)]; }

std::optional<Joint> joint_from_name(std::string_view name) {
    for (int i = 0; i < kJointCount; ++i)
        if (kJointNames[i] == name) return Joint(i);
    return std::nullopt;
}

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

const SegmentMap& SegmentMap::standard() {
    static const SegmentMap map = {{{
        {Joint::shoulder_r, Joint::elbow_r, Joint::wrist_r, Joint::hand_r},
        {Joint::shoulder_l, Joint::elbow_l, Joint::wrist_l, Joint::hand_l},
        {Joint::knee_r, Joint::ankle_r, Joint::foot_r},
        {Joint::knee_l, Joint::ankle_l, Joint::foot_l},
    }}};
    return map;
}

SkeletonFrame localize_frame(const SkeletonFrame& frame) {
    SkeletonFrame out;
    out.t = frame.t;
    const Vec3 upper_origin = frame[Joint::shoulder_center];
    const Vec3 lower_origin = frame[Joint::hip_center];
    for (int i = 0; i < kJointCount; ++i)
        out.joints[i] = frame.joints[i] - (kUpperBody[i] ? upper_origin : lower_origin);
    return out;
}

MomentumVector segment_displacement(const SkeletonFrame& prev, const SkeletonFrame& cur,
                                    const SegmentMap& segmap) {
    MomentumVector mm;
    for (size_t s = 0; s < MomentumVector::kSegments; ++s) {
        double total = 0.0;
        for (Joint j : segmap.segments[s]) total += distance(prev[j], cur[j]);
        mm[s] = total;
    }
    return mm;
}

MomentumVector accumulate_momentum(std::span<const SkeletonFrame> frames,
                                   const SegmentMap& segmap) {
    if (frames.empty()) throw IoError("accumulate_momentum: empty skeleton stream");
    MomentumVector mm;
    SkeletonFrame prev = localize_frame(frames[0]);
    for (size_t i = 1; i < frames.size(); ++i) {
        if (!(frames[i].t > frames[i - 1].t))
            throw IoError("accumulate_momentum: timestamps not strictly increasing at frame " +
                          std::to_string(i));
        SkeletonFrame cur = localize_frame(frames[i]);
        mm += segment_displacement(prev, cur, segmap);
        prev = cur;
    }
    return mm;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    cells.push_back(cur);
    return cells;
}

double parse_cell(const std::string& cell, const std::string& origin, size_t row, size_t col) {
    double v = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(v))
        throw IoError(origin + ": bad numeric value '" + cell + "' at row " +
                      std::to_string(row) + ", column " + std::to_string(col));
    return v;
}

}  // namespace

std::vector<SkeletonFrame> parse_skeleton_csv(std::istream& in, const std::string& origin) {
    std::string line;
    if (!std::getline(in, line)) throw IoError(origin + ": empty skeleton file");

    auto header = split_csv_line(line);
    if (header.empty() || header[0] != "t")
        throw IoError(origin + ": first header column must be 't'");
    if (header.size() != 1 + 3 * size_t(kJointCount))
        throw IoError(origin + ": expected " + std::to_string(1 + 3 * kJointCount) +
                      " columns, found " + std::to_string(header.size()));
    static constexpr std::array<std::string_view, 3> axes = {"x", "y", "z"};
    for (int j = 0; j < kJointCount; ++j) {
        for (int a = 0; a < 3; ++a) {
            std::string expect = std::string(joint_name(Joint(j))) + "_" + std::string(axes[a]);
            const std::string& got = header[1 + 3 * j + a];
            if (got != expect)
                throw IoError(origin + ": missing or misplaced joint column, expected '" +
                              expect + "', found '" + got + "'");
        }
    }

    std::vector<SkeletonFrame> frames;
    size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw IoError(origin + ": row " + std::to_string(row) + " has " +
                          std::to_string(cells.size()) + " cells, expected " +
                          std::to_string(header.size()));
        SkeletonFrame f;
        f.t = parse_cell(cells[0], origin, row, 0);
        if (f.t < 0.0) throw IoError(origin + ": negative timestamp at row " + std::to_string(row));
        for (int j = 0; j < kJointCount; ++j) {
            f.joints[j].x = parse_cell(cells[1 + 3 * j + 0], origin, row, 1 + 3 * j + 0);
            f.joints[j].y = parse_cell(cells[1 + 3 * j + 1], origin, row, 1 + 3 * j + 1);
            f.joints[j].z = parse_cell(cells[1 + 3 * j + 2], origin, row, 1 + 3 * j + 2);
        }
        frames.push_back(f);
    }
    return frames;
}

std::vector<SkeletonFrame> read_skeleton_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open skeleton stream: " + path.string());
    return parse_skeleton_csv(in, path.string());
}

void write_skeleton_csv(const std::filesystem::path& path, std::span<const SkeletonFrame> frames) {
    std::ostringstream out;
    out << "t";
    for (int j = 0; j < kJointCount; ++j) {
        auto n = joint_name(Joint(j));
        out << "," << n << "_x," << n << "_y," << n << "_z";
    }
    out << "\n";
    for (const auto& f : frames) {
        out << format_double(f.t);
        for (const auto& p : f.joints)
            out << "," << format_double(p.x) << "," << format_double(p.y) << ","
                << format_double(p.z);
        out << "\n";
    }
    write_text_file(path, out.str());
}

}  // namespace hpai
