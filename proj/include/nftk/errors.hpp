#pragma once

#include <stdexcept>
#include <string>

namespace nftk {

/// Invalid configuration values (fractions out of range, bad swarm sizes, ...).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Problems with input data: missing files, malformed lines, degenerate columns.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nftk
