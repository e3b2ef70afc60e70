#pragma once

// Batch front end: argument parsing, dispatch to the library, record output.
// Exit codes: 0 ok, 1 usage error, 2 verification failure.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "detcoh/serialize.hpp"

namespace detcoh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

struct JobConfig {
  std::string command;  // ext, ext-sub, loccoh, reg, gauss, verify, bott-step
  int m = 0;
  int n = 0;
  std::optional<std::string> x;
  std::optional<int> p;
  std::optional<std::string> box;
  std::optional<std::string> zwin;
  OutputFormat output = OutputFormat::Json;
  bool dims_flag = false;
  bool trace = false;
  std::optional<int> a;
  std::optional<int> b;
  std::optional<std::string> mu;
  std::optional<int> d;
  bool quick = false;
  std::optional<std::string> suite;
};

/// Executes a parsed job. Invalid parameters are reported on `err` with exit
/// code 1.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and runs the job.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace detcoh::cli
