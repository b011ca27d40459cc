#include <iostream>
#include <string>
#include <vector>

#include "toricheap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return toricheap::cli::run(args, std::cin, std::cout, std::cerr);
}
