#include <iostream>
#include <string>
#include <vector>

#include "monoideal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return monoideal::cli::run(args, std::cin, std::cout, std::cerr);
}
