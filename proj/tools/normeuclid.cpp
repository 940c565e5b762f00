#include <iostream>
#include <string>
#include <vector>

#include "normeuclid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return normeuclid::cli::run(args, std::cout, std::cerr);
}
