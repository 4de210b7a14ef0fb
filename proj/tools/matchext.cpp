#include <iostream>

#include "matchext/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return matchext::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
