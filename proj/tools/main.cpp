#include <iostream>

#include "skoro/cli.hpp"

int main(int argc, char** argv) {
  return skoro::run_cli(argc, argv, std::cout, std::cerr);
}
