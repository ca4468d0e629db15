#include <iostream>
#include <string>
#include <vector>

#include "acfc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return acfc::cli::runCli(args, std::cout, std::cerr);
}
