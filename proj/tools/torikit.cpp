#include <iostream>
#include <string>
#include <vector>

#include "torikit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return torikit::cli::run(args, std::cout, std::cerr);
}
