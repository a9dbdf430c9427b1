#include <iostream>

#include "weylcells/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return weylcells::run_cli(args, std::cout, std::cerr);
}
