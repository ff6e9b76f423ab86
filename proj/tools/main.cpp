#include <iostream>
#include <string>
#include <vector>

#include "sphlap2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sphlap2::cli::run(args, std::cout, std::cerr);
}
