#include <iostream>
#include <vector>

#include "algeo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return algeo::run_command(args, std::cout, std::cerr);
}
