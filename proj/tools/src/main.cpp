#include <iostream>
#include <string>
#include <vector>

#include "qrank_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qrank::cli::run(args, std::cout, std::cerr);
}
