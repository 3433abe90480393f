#include <iostream>
#include <vector>

#include "qs3/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qs3::cli::run(std::move(args), std::cout, std::cerr);
}
