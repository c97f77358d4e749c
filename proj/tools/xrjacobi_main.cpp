#include <iostream>
#include <string>
#include <vector>

#include "xrj/cli_run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return xrj::run(args, std::cout, std::cerr);
}
