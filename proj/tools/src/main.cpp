#include <iostream>
#include <string>
#include <vector>

#include "g3enum/cli.hpp"

int main(int argc, char** argv) {
  return g3enum::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
