#include <iostream>

#include "latnorm/cli.hpp"

int main(int argc, char** argv) {
  return latnorm::run_cli(argc, argv, std::cout, std::cerr);
}
