#include <iostream>
#include <string>
#include <vector>

#include "artlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return artlab::dispatch(args, std::cout, std::cerr);
}
