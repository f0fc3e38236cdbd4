#include <iostream>
#include <string>
#include <vector>

#include "symideal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return symideal::cli::execute(args, std::cout, std::cerr);
}
