#include <iostream>

#include "hashchain/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return hashchain::cli::run(argc, argv, std::cout, std::cerr);
}
