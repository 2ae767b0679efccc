#include <iostream>

#include "bcbounds/cli.hpp"

int main(int argc, char** argv) {
  return bcb::cli::cli_main(argc, argv, std::cout, std::cerr);
}
