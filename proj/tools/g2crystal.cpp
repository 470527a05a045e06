#include <iostream>

#include "g2crystal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return g2crystal::run_cli(args, std::cout, std::cerr);
}
