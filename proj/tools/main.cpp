#include <iostream>
#include <string>
#include <vector>

#include "fermisea/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fermisea::cli::run_main(args, std::cout, std::cerr);
}
