#pragma once

// Subcommands of intr_cli. run_cli parses arguments with CLI11 and writes the
// result to `out` (or to --out); diagnostics go to `err`.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace intr::cli {

struct RunConfig {
  std::string subcommand;
  std::string monoid = "Q: 0 u [1,inf)";
  std::string field = "Q";
  long grid_q = 2;
  std::string from = "1";
  std::string to = "12";
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string out;                // empty: write to the output stream
  std::vector<std::string> args;  // positional arguments of the subcommand
};

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Runs a parsed configuration; output text is appended to `out`.
int run(const RunConfig& cfg, std::string& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace intr::cli
