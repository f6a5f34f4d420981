#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return maxsub::cli::run(argc, argv, std::cout, std::cerr);
}
