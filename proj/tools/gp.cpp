#include <iostream>
#include <string>
#include <vector>

#include "graphprod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return graphprod::run_cli(args, std::cout, std::cerr);
}
