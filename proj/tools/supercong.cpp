#include <iostream>

#include "supercong/cli.hpp"

int main(int argc, char** argv) {
  return supercong::cli_main(argc, argv, supercong::default_registry(), std::cout, std::cerr);
}
