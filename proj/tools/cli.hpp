#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace towerkit::cli {

/// Settings shared by every command; embedded in every report.
struct RunConfig {
  int bound = -1;  ///< -1: the command's default
  int ex_depth = 1;
  std::uint64_t cap = 2'000'000;
  std::string format = "json";
  std::string out;
  bool timings = false;
  std::string command;

  nlohmann::ordered_json to_json() const;
};

/// Runs one command line (without the program name). Returns 0 on success, 1 on a
/// failed check or computation error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace towerkit::cli
