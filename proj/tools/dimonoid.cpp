#include <iostream>

#include "dimonoid/cli.hpp"

int main(int argc, char** argv) {
  return dimonoid::cli::run(argc, argv, std::cout, std::cerr);
}
