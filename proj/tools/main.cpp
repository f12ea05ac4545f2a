#include <iostream>

#include "tiltwall/cli.hpp"

int main(int argc, char** argv) {
  return tiltwall::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
