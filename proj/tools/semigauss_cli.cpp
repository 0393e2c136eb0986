#include <iostream>
#include <string>
#include <vector>

#include "semigauss/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return semigauss::cli::run(args, std::cout, std::cerr);
}
