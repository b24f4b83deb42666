#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace hpai {

/// Shortest round-trip decimal form of a double (std::to_chars), the same on
/// every run. All machine-readable CSV output goes through this.
std::string format_double(double v);

/// Fixed two decimals, for human-facing percent columns.
std::string format_fixed2(double v);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);
void ensure_parent_dir(const std::filesystem::path& path);
void ensure_dir(const std::filesystem::path& dir);

/// Minimal filename glob: `*` and `?` in the final path component only.
/// Returns matches sorted by path.
std::vector<std::filesystem::path> glob_files(const std::string& pattern);

}  // namespace hpai
