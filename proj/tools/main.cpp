#include "glspec/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return glspec::cli::run(argc, argv, std::cout, std::cerr);
}
