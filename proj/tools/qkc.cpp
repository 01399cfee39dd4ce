#include <iostream>

#include "qkc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qkc::cli::run(args, std::cout, std::cerr);
}
