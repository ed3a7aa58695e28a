#include <iostream>
#include <string>
#include <vector>

#include "mptutte/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mptutte::run_cli(args, std::cout, std::cerr);
}
