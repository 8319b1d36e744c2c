#include <iostream>
#include <string>
#include <vector>

#include "fg/io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fg::run_command(args, std::cout, std::cerr);
}
