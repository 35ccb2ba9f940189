#include <iostream>
#include <string>
#include <vector>

#include "pi3geo/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return pi3::run_cli(args, std::cout, std::cerr);
}
