#include <iostream>
#include <string>
#include <vector>

#include "twoconn_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return twoconn::cli::run(args, std::cout, std::cerr);
}
