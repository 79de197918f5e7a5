#include <iostream>
#include <string>
#include <vector>

#include "frsim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return frsim::run_cli(args, std::cout, std::cerr);
}
