#include <iostream>
#include <string>
#include <vector>

#include "frobsplit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return frobsplit::run_cli(std::move(args), std::cout, std::cerr);
}
