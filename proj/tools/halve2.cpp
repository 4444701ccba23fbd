#include <iostream>
#include <string>
#include <vector>

#include "halve2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return halve2::cli::run(args, std::cin, std::cout, std::cerr);
}
