#include <iostream>

#include "polypart/cli.hpp"

int main(int argc, char** argv) {
  return polypart::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
