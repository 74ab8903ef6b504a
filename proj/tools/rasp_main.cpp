#include <iostream>
#include <vector>

#include "rasp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rasp::run_cli(args, std::cout, std::cerr);
}
