#pragma once

#include <stdexcept>
#include <string>

namespace hpai {

/// Bad or inconsistent configuration (config file, table wiring, vocabularies).
/// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem / stream failures and malformed data files. CLI exit code 3.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hpai
