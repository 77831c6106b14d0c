#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto res = optcyc::cli::run(args);
  std::cout << res.out << std::flush;
  std::cerr << res.err << std::flush;
  return res.exit_code;
}
