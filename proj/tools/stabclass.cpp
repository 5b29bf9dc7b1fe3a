#include <iostream>

#include "stabclass/cli.hpp"

int main(int argc, char** argv) {
  return stabclass::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
