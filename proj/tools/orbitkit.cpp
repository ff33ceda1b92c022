#include <iostream>

#include "orbitkit/cli.hpp"

int main(int argc, char** argv) {
  return orbitkit::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
