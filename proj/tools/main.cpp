#include <iostream>

#include "mrange/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = mrange::cli::run(args, std::cin);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
