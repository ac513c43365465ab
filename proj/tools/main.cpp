#include <iostream>
#include <string>
#include <vector>

#include "goodkn/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return goodkn::run_cli(args, std::cout, std::cerr);
}
