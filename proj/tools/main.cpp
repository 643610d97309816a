#include <iostream>
#include <string>
#include <vector>

#include "fcadr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fcadr::cli::run(args, std::cout, std::cerr);
}
