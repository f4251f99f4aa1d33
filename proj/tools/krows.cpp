#include <iostream>
#include <string>
#include <vector>

#include "krows/cli_main.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return krows::run_cli(args, std::cout, std::cerr);
}
