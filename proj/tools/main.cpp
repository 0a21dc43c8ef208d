#include <iostream>
#include <string>
#include <vector>

#include "curvebounds/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return curvebounds::run(args, std::cout, std::cerr);
}
