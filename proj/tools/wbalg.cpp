#include <iostream>

#include "wbalg/cli.hpp"

int main(int argc, char** argv) {
  return wbalg::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
