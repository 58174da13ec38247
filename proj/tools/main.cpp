#include <iostream>

#include "bipart/cli.hpp"

int main(int argc, char** argv) {
  return bipart::cli_main(argc, argv, std::cout, std::cerr);
}
