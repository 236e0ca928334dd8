#include <iostream>

#include "metacode/cli.hpp"

int main(int argc, char** argv) {
  return metacode::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
