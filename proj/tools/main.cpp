#include <iostream>
#include <string>
#include <vector>

#include "qcycle/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qcycle::run_cli(args, std::cout, std::cerr);
}
