#include <iostream>
#include <string>
#include <vector>

#include "gyrorep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gyrorep::run_cli(args, std::cout, std::cerr);
}
