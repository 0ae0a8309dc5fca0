#include <iostream>

#include "tacnode/cli.hpp"

int main(int argc, char** argv) {
  return tacnode::cli::run(argc, argv, std::cout, std::cerr);
}
