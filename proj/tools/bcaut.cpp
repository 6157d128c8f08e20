#include <iostream>
#include <string>
#include <vector>

#include <bcaut/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bcaut::cli::run_cli(args, std::cout, std::cerr);
}
