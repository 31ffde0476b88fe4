#include <iostream>
#include <string>
#include <vector>

#include "ldisj/harness.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return ldisj::run_cli(args, std::cout, std::cerr);
}
