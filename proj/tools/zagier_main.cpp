#include <iostream>
#include <vector>

#include "zagier/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zagier::cli::run(std::move(args), std::cout, std::cerr);
}
