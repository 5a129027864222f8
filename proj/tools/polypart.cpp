#include <iostream>
#include <string>
#include <vector>

#include "polypart/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polypart::cli::run(args, std::cout, std::cerr);
}
