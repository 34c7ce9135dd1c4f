#include <iostream>
#include <string>
#include <vector>

#include "rowinc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rowinc::cli::run(args, std::cin, std::cout, std::cerr);
}
