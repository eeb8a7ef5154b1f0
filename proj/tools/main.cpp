#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const auto parsed = ucycle::cli::parse_command_line(args, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  return ucycle::cli::run(*parsed.config, std::cout, std::cerr);
}
