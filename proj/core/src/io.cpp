#include "hpai/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

#include "hpai/errors.hpp"

namespace hpai {

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_fixed2(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file for reading: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failure: " + path.string());
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    ensure_parent_dir(path);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open file for writing: " + path.string());
    out << content;
    out.flush();
    if (!out) throw IoError("write failure: " + path.string());
}

void ensure_parent_dir(const std::filesystem::path& path) {
    auto parent = path.parent_path();
    if (!parent.empty()) ensure_dir(parent);
}

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

namespace {

bool glob_match(std::string_view pat, std::string_view name) {
    size_t p = 0, n = 0, star = std::string_view::npos, mark = 0;
    while (n < name.size()) {
        if (p < pat.size() && (pat[p] == '?' || pat[p] == name[n])) {
            ++p;
            ++n;
        } else if (p < pat.size() && pat[p] == '*') {
            star = p++;
            mark = n;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            n = ++mark;
        } else {
            return false;
        }
    }
    while (p < pat.size() && pat[p] == '*') ++p;
    return p == pat.size();
}

}  // namespace

std::vector<std::filesystem::path> glob_files(const std::string& pattern) {
    std::filesystem::path pat(pattern);
    std::filesystem::path dir = pat.parent_path();
    std::string leaf = pat.filename().string();
    if (dir.empty()) dir = ".";
    if (leaf.find('*') == std::string::npos && leaf.find('?') == std::string::npos) {
        if (std::filesystem::exists(pat)) return {pat};
        throw IoError("no such file: " + pattern);
    }
    if (!std::filesystem::is_directory(dir))
        throw IoError("glob directory does not exist: " + dir.string());
    std::vector<std::filesystem::path> out;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (glob_match(leaf, entry.path().filename().string())) out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    if (out.empty()) throw IoError("glob matched no files: " + pattern);
    return out;
}

}  // namespace hpai
