#include <iostream>
#include <string>
#include <vector>

#include "lojex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lojex::cli::run(args, std::cout, std::cerr);
}
