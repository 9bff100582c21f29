#include <iostream>
#include <string>
#include <vector>

#include "crossdrop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return crossdrop::run_cli(args, std::cout, std::cerr);
}
