#include <iostream>

#include "monodir_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return monodir::cli::run(args, std::cout, std::cerr);
}
