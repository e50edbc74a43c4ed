#include <iostream>
#include <string>
#include <vector>

#include "misere/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return misere::run_cli(args, std::cout, std::cerr);
}
