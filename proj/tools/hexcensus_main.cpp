#include <iostream>

#include "hexcensus/cli.hpp"

int main(int argc, char** argv) {
  return hexcensus::run_cli(argc, argv, std::cout, std::cerr);
}
