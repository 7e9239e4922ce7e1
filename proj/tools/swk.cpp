#include <iostream>
#include <string>
#include <vector>

#include "swk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return swk::cli::run(args, std::cout, std::cerr);
}
