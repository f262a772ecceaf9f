#include <iostream>

#include "krfusion/cli.hpp"

int main(int argc, char** argv) {
  return krfusion::cli::main_entry(argc, argv, std::cout, std::cerr);
}
