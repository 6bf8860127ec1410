#include <iostream>
#include <string>
#include <vector>

#include "balseg/cli.hpp"

int main(int argc, char** argv) {
  return balseg::run_cli(std::vector<std::string>(argv + 1, argv + argc),
                         std::cout, std::cerr);
}
