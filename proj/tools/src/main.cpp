#include <iostream>

#include "anisogate/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return anisogate::cli::run(std::move(args), std::cout, std::cerr);
}
