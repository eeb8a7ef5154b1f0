#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ucycle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitNoCycle = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

enum class Format { Text, Json };

struct RunConfig {
  std::string command;  // generate, verify, exists, decompose, census, path, export-dot
  std::string class_name;
  std::optional<std::size_t> k;
  std::optional<std::size_t> n;
  std::optional<std::size_t> max_k;
  std::string input;
  std::string source;
  std::string target;
  Format format = Format::Text;
  std::string out_path;  // empty means the caller's stream
};

struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;  // meaningful when config is empty (help or usage error)
};

/// Parses argv; usage errors are reported on `err` and yield exit 64.
ParseResult parse_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes one command and returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ucycle::cli
