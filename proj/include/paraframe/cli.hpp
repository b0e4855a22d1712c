#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "paraframe/hypersurface.hpp"
#include "paraframe/report.hpp"

namespace paraframe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  ModelId model = ModelId::S1;
  double r = 1.0;
  std::optional<Params> point;
  std::string grid;
  int samples = 100;
  std::uint64_t seed = 42;
  double tol = kDefaultTolerance;
  OutputFormat format = OutputFormat::Json;
  bool parallel = false;
};

/// A real number, optionally written as a multiple of pi: "0.5", "pi",
/// "-pi/4", "2*pi/3", "3pi/2". Throws std::invalid_argument.
double parse_scalar(const std::string& token);

/// Three comma-separated scalars.
Params parse_point(const std::string& text);

/// "axis;axis;axis" where each axis is a single scalar, a comma list, or
/// "start:stop:count" (inclusive, evenly spaced). Points are enumerated with
/// the last axis varying fastest. A zero count yields an empty grid.
std::vector<Params> parse_grid(const std::string& text);

/// Entry point behind the `paraframe` executable. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paraframe::cli
