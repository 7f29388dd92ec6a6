#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace schwinger::cli {

/// Process exit codes.
enum ExitCode : int {
  kPass = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kInternalError = 3,
};

enum class Format { Text, Json };

struct RunConfig {
  int n = 0;
  std::optional<int> m;
  std::optional<int> max_m;
  Format format = Format::Text;
  std::filesystem::path cache_dir;
  std::uint64_t seed = 0;
  int max_degree = 30;
  /// Random pairs per level for the homomorphism check.
  int samples = 200;
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schwinger::cli
