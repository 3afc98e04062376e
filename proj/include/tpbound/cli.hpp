#pragma once

// Command-line front end shared by the tpbound executable and the tests.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tpbound/combinatorics.hpp"
#include "tpbound/rational.hpp"

namespace tpbound::cli {

/// ratio := term+ "/" term+
/// term  := "[" int ("," int)* "]"  |  "(" ints "|" ints ")"
/// Minor terms need an explicit rank. Without one the rank is the size of
/// the first bracket.
RatioExpr parse_ratio(std::string_view text, std::optional<int> rank = std::nullopt);
std::string format_ratio(const RatioExpr& r);

/// Reads [["1/2","3"], ...].
Matrix parse_matrix(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);

struct Command {
  std::string name;
  std::string ratio;
  std::optional<int> rank;
  bool json = false;
  std::uint64_t seed = 1;
  std::optional<int> budget;
  std::optional<std::string> threshold;
  std::optional<std::string> t_ladder;  // comma separated rationals
  std::optional<std::string> matrix;    // inline JSON or a path
  std::optional<std::string> file;
  bool count = false;
  int magnitude = 3;
  int times = 1;
};

/// Arguments without the program name. Throws Error(InvalidInput) on a bad
/// command line.
Command parse_command(const std::vector<std::string>& args);

struct Report {
  int exit_code = 0;
  std::string text;
  nlohmann::json json;
};

/// 0 on a decided verdict, 2 when inconclusive, 1 on input errors.
Report run(const Command& cmd);

/// Parses, runs and prints; returns the exit code.
int main_entry(const std::vector<std::string>& args);

}  // namespace tpbound::cli
