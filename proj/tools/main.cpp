#include <iostream>

#include "hyperbb/cli.hpp"

int main(int argc, char** argv) {
  return hyperbb::cli::run(argc, argv, std::cout, std::cerr);
}
