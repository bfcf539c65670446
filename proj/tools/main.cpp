#include <iostream>
#include <string>
#include <vector>

#include "nullgb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nullgb::run_cli(args, std::cout, std::cerr);
}
