#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "dioph/report.hpp"

namespace dioph::cli {

/// One experiment invocation. Numeric parameters stay as the exact strings given.
struct ExperimentConfig {
  std::string command;
  std::map<std::string, std::string> params;
  /// Empty for standard output.
  std::string output;
  std::string format = "json";
  long precision_cap = 256;
  unsigned jobs = 1;
  std::uint64_t seed = 0;

  Json to_json() const;
  /// Throws InvalidArgument on a malformed document.
  static ExperimentConfig from_json(const Json& j);

  bool has(const std::string& key) const { return params.count(key) != 0; }
  /// Throws InvalidArgument naming the missing flag.
  const std::string& get(const std::string& key) const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

}  // namespace dioph::cli
