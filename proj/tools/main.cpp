#include <iostream>
#include <vector>

#include "trigdunkl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return trigdunkl::cli_run(args, std::cout, std::cerr);
}
