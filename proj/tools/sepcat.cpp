#include <iostream>

#include "sepcat/cli.hpp"

int main(int argc, char** argv) {
  return sepcat::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
