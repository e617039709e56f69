#include <iostream>

#include "qcenter/shell.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qcenter::run_cli(args, std::cout, std::cerr);
}
