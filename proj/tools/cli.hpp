// Command-line front end: `dlpa <command> [flags] <formula>`.
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dlpa::cli {

inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOracleCap = 3;

/// Runs one invocation. `args` excludes the program name. Output is
/// written to `out` in one piece once the command has finished.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

struct FuzzConfig {
  std::uint64_t seed = 42;
  std::size_t cases = 100;
  std::size_t max_atoms = 3;
  std::size_t max_len = 12;
  bool stars = false;
};

struct FuzzReport {
  bool agree = true;
  std::string text;  // first line is `ALL AGREE` or `DIVERGENCE`
};

/// Case i uses seed + i, so `--seed <seed+i> --cases 1` reproduces it alone.
FuzzReport fuzz(const FuzzConfig& config);

}  // namespace dlpa::cli
