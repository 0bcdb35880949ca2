#include <iostream>
#include <string>
#include <vector>

#include "modkernel/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return modkernel::run_cli(args, std::cout, std::cerr);
}
