#include "minlog/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
  return minlog::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
