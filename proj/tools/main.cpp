#include <iostream>

#include "excoh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return excoh::run_cli(args, std::cout, std::cerr);
}
