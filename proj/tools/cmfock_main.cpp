#include <iostream>
#include <vector>

#include "cmfock/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cmfock::run_cli(args, std::cout, std::cerr);
}
