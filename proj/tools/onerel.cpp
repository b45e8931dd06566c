#include <iostream>

#include "onerel/cli.hpp"

int main(int argc, char** argv) {
  return onerel::cli::run(argc, argv, std::cout, std::cerr);
}
